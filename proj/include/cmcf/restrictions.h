#ifndef CMCF_RESTRICTIONS_H_
#define CMCF_RESTRICTIONS_H_

#include <string>
#include <vector>

#include "cmcf/network.h"

namespace cmcf {

enum class YFix : unsigned char { kFree, kZero, kOne };

const char* YFixName(YFix fix);

// Branching state of one tree node: per-commodity forbidden arcs and the
// fixing of the rejection variable y_k. Everything a branching rule does is
// expressed through these two.
class Restrictions {
 public:
  Restrictions() = default;
  Restrictions(int num_commodities, int num_arcs);
  explicit Restrictions(const Instance& inst)
      : Restrictions(inst.num_commodities(), inst.num_arcs()) {}

  int num_commodities() const { return static_cast<int>(y_.size()); }
  int num_arcs() const { return num_arcs_; }

  bool forbidden(int k, int a) const {
    return forbidden_[static_cast<size_t>(k) * num_arcs_ + a] != 0;
  }
  void Forbid(int k, int a) {
    forbidden_[static_cast<size_t>(k) * num_arcs_ + a] = 1;
  }
  YFix y_fix(int k) const { return y_[k]; }
  void FixY(int k, YFix fix) { y_[k] = fix; }

  // Arcs of the unique route every s_k-path must start with: walking from
  // s_k, follow the single non-forbidden outgoing arc while there is exactly
  // one. Only meaningful when y_k is fixed to 0; empty otherwise.
  std::vector<int> ForcedArcs(const Instance& inst, int k) const;

  // Arc mask for commodity k. Always excludes forbidden arcs. With
  // capacity_rules, also excludes arcs with c_a < b_k and arcs whose
  // capacity left after the commodities forced through them is below b_k.
  std::vector<char> Admissible(const Instance& inst, int k,
                               bool capacity_rules) const;

  // Whether `arcs` only uses arcs allowed for k under the same rules.
  bool PathAllowed(const Instance& inst, int k, const std::vector<int>& arcs,
                   bool capacity_rules) const;

  std::string DebugString() const;

  friend bool operator==(const Restrictions&, const Restrictions&) = default;

 private:
  int num_arcs_ = 0;
  std::vector<char> forbidden_;
  std::vector<YFix> y_;
};

}  // namespace cmcf

#endif  // CMCF_RESTRICTIONS_H_
