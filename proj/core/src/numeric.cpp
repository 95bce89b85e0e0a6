#include "trop/numeric.hpp"

namespace trop {

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw InputError("empty rational literal");
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
    throw InputError("bad rational literal '" + text + "'");
  if (mpq_denref(r.get_mpq_t())->_mp_size == 0)
    throw InputError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string rat_string(const Rat& value) {
  return value.get_str();
}

int compare(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

int compare(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

}  // namespace trop
