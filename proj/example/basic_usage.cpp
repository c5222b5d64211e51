// Build F_27 with k = 1, print a few exact sums and the value distribution.

#include <iostream>

#include "seqspectra/seqspectra.hpp"

using namespace seqspectra;

int main() {
  const FieldCtx ctx = FieldCtx::build(3, 3, 1);
  const auto& fp = ctx.params();
  std::cout << "p^n = " << fp.q << ", d = " << fp.d << ", N = " << fp.period << "\n";

  // S(a,b) is stored as (twoA + twoB·√(-3)) / 2
  for (std::uint64_t b : {0, 1, 5}) {
    const QuadValue s = sab(ctx, ctx.one(), ctx.from_code(b));
    std::cout << "S(1, " << b << ") = (" << s.twoA << " + " << s.twoB << "·√-3)/2  ~ " << to_complex(s, fp.p) << "\n";
  }

  const auto dist = value_distribution_bruteforce(ctx);
  std::cout << "distribution matches closed form: " << std::boolalpha << (dist == closed_form_distribution(ctx))
            << "\n";
  for (const auto& [v, c] : dist.entries) std::cout << "  (" << v.twoA << ", " << v.twoB << ") x " << c << "\n";

  const auto sp = family_spectrum(ctx, Scope::AllShifts);
  std::cout << "max 4|C|^2 = " << detail::to_string(sp.max_observed_times4)
            << ", bound = " << detail::to_string(sp.bound_times4) << "\n";
}
