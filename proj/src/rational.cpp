#include "okbody/rational.hpp"

#include "okbody/errors.hpp"

namespace okbody {

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw ValidationError("empty rational literal");
    try {
        Rat r(text);
        r.canonicalize();
        if (r.get_den() == 0) throw ValidationError("zero denominator in '" + text + "'");
        return r;
    } catch (const std::invalid_argument&) {
        throw ValidationError("cannot parse rational '" + text + "'");
    }
}

std::string rat_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_floor(const Rat& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return Rat(q);
}

Rat rat_ceil(const Rat& r) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return Rat(q);
}

bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

long rat_to_long(const Rat& r) {
    if (!rat_is_integer(r)) throw ValidationError("expected integer, got " + rat_string(r));
    if (!r.get_num().fits_slong_p()) throw ValidationError("integer out of range: " + rat_string(r));
    return r.get_num().get_si();
}

} // namespace okbody
