#include "systolic/classify.hpp"

#include <ostream>
#include <sstream>

#include "systolic/homotopy.hpp"
#include "systolic/largeness.hpp"

namespace systolic {

ClassifyReport classify(const Complex& x, int effort) {
  ClassifyReport r;
  r.flag = is_flag(x);
  if (r.flag) {
    r.locally_5_large = tri_of(is_locally_k_large(x, 5));
    r.locally_6_large = tri_of(is_locally_k_large(x, 6));
    r.sd2_star = tri_of(satisfies_sd2star(x));
    r.sd2_star_links = tri_of(has_sd2star_links(x));
  }
  if (x.empty()) {
    r.simply_connected = TriState::Yes;  // vacuous
  } else if (!is_connected(x)) {
    r.simply_connected = TriState::No;
  } else {
    r.simply_connected = is_simply_connected_bounded(x, effort);
  }
  if (!r.flag) {
    // Systolic and weakly systolic complexes are flag by definition.
    r.systolic = TriState::No;
    r.weakly_systolic = TriState::No;
  } else {
    r.systolic = tri_and(r.locally_6_large, r.simply_connected);
    r.weakly_systolic = tri_and(r.sd2_star, r.simply_connected);
  }
  return r;
}

void print_report(std::ostream& out, const ClassifyReport& r, bool machine) {
  const TriState flag_t = tri_of(r.flag);
  if (machine) {
    out << "flag=" << to_letter(flag_t) << '\n'
        << "locally_5_large=" << to_letter(r.locally_5_large) << '\n'
        << "locally_6_large=" << to_letter(r.locally_6_large) << '\n'
        << "sd2_star=" << to_letter(r.sd2_star) << '\n'
        << "sd2_star_links=" << to_letter(r.sd2_star_links) << '\n'
        << "simply_connected=" << to_letter(r.simply_connected) << '\n'
        << "systolic=" << to_letter(r.systolic) << '\n'
        << "weakly_systolic=" << to_letter(r.weakly_systolic) << '\n';
    return;
  }
  out << "flag:             " << to_string(flag_t) << '\n'
      << "locally 5-large:  " << to_string(r.locally_5_large) << '\n'
      << "locally 6-large:  " << to_string(r.locally_6_large) << '\n'
      << "SD2*:             " << to_string(r.sd2_star) << '\n'
      << "SD2* links:       " << to_string(r.sd2_star_links) << '\n'
      << "simply connected: " << to_string(r.simply_connected) << '\n'
      << "systolic:         " << to_string(r.systolic) << '\n'
      << "weakly systolic:  " << to_string(r.weakly_systolic) << '\n';
}

std::string report_to_string(const ClassifyReport& r, bool machine) {
  std::ostringstream ss;
  print_report(ss, r, machine);
  return ss.str();
}

}  // namespace systolic
