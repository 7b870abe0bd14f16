#ifndef BSDLAB_TATE_HPP
#define BSDLAB_TATE_HPP

#include <string>
#include <vector>

#include "bsdlab/curve.hpp"

namespace bsdlab {

enum class KodairaType { I0, In, II, III, IV, I0star, Instar, IVstar, IIIstar, IIstar };
enum class ReductionType { good, split_mult, nonsplit_mult, additive };

struct LocalData {
    Int p;
    KodairaType kodaira = KodairaType::I0;
    int n = 0;          // the n of I_n / I_n*, else 0
    int f_p = 0;        // conductor exponent
    int tamagawa = 1;   // c_p
    ReductionType reduction = ReductionType::good;

    std::string kodaira_symbol() const;
};

// Tate's algorithm at p; expects a globally minimal model.
LocalData tate_local_data(const CurveQ& e_min, const Int& p);

// prod p^{f_p} over p | disc of the minimal model
Int conductor(const CurveQ& e);

// all local data at bad primes of the minimal model, sorted by p
std::vector<LocalData> bad_local_data(const CurveQ& e_min);

Int tamagawa_product(const std::vector<LocalData>& local);

}  // namespace bsdlab

#endif
