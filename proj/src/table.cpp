#include "msop/table.hpp"

#include <memory>

namespace msop {

void validate(const TableInstance& t) {
  if (t.n < 1 || t.n > TableInstance::kMaxElements) {
    throw Error(ErrorCode::kValidationError, "table instances need 1 <= n <= 16");
  }
  const std::size_t count = std::size_t{1} << t.n;
  if (t.f.size() != count || t.g.size() != count) {
    throw Error(ErrorCode::kValidationError, "f and g must be listed on all 2^n subsets");
  }
  if (!t.member.empty()) {
    if (t.member.size() != count) throw Error(ErrorCode::kValidationError, "family table has wrong size");
    if (!t.member[0] || !t.member[count - 1]) {
      throw Error(ErrorCode::kValidationError, "family must contain the empty set and the ground set");
    }
  }
  if (sgn(t.f[0]) != 0 || sgn(t.g[0]) != 0) {
    throw Error(ErrorCode::kValidationError, "f and g must vanish on the empty set");
  }
  for (std::size_t s = 0; s < count; ++s) {
    for (int v = 0; v < t.n; ++v) {
      const std::size_t u = s | (std::size_t{1} << v);
      if (u == s) continue;
      if (t.f[u] < t.f[s] || t.g[u] < t.g[s]) {
        throw Error(ErrorCode::kValidationError,
                    "f or g decreases from " + Subset::from_mask(s).str() + " to " + Subset::from_mask(u).str());
      }
    }
  }
}

MsopInstance to_msop(const TableInstance& table) {
  validate(table);
  auto data = std::make_shared<const TableInstance>(table);
  StructureFlags flags = table.flags;
  if (table.free_family()) {
    flags.free_family = true;
    flags.union_closed = true;
    flags.intersection_closed = true;
  }
  SetPredicate family = [data](const Subset& s) {
    return data->member.empty() || data->member[static_cast<std::size_t>(s.mask())] != 0;
  };
  SetFunction f = [data](const Subset& s) { return data->f[static_cast<std::size_t>(s.mask())]; };
  SetFunction g = [data](const Subset& s) { return data->g[static_cast<std::size_t>(s.mask())]; };
  return MsopInstance(table.n, std::move(family), std::move(f), std::move(g), flags);
}

TableInstance tabulate(const MsopInstance& instance) {
  const int n = instance.size();
  if (n > TableInstance::kMaxElements) throw Error(ErrorCode::kTooLarge, "instance too large to tabulate");
  TableInstance t;
  t.n = n;
  t.flags = instance.flags();
  const std::size_t count = std::size_t{1} << n;
  t.f.resize(count);
  t.g.resize(count);
  bool all_members = true;
  std::vector<char> member(count, 0);
  for (std::size_t m = 0; m < count; ++m) {
    const Subset s = Subset::from_mask(m);
    t.f[m] = instance.cost(s);
    t.g[m] = instance.weight(s);
    member[m] = instance.in_family(s) ? 1 : 0;
    all_members = all_members && member[m];
  }
  if (!all_members) t.member = std::move(member);
  return t;
}

}  // namespace msop
