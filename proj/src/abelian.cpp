#include "latdim/abelian.hpp"

#include <algorithm>

#include "latdim/error.hpp"

namespace latdim {

namespace {

bool is_subset(const std::vector<Element>& small, const std::vector<char>& big) {
  return std::all_of(small.begin(), small.end(), [&](Element x) { return big[x] != 0; });
}

}  // namespace

AbelianDecomposition cyclic_decomposition(const FiniteGroup& a) {
  if (!a.is_abelian())
    throw Error(ErrorCode::NotAbelian, "group '" + a.label() + "' is not abelian");

  AbelianDecomposition dec{a, {}, {}, {}};
  const auto subgroups = all_subgroups(a);

  // Current summand still to be split, as a membership mask.
  std::vector<char> rest(a.order(), 1);
  std::size_t rest_order = a.order();
  while (rest_order > 1) {
    Element best = a.identity();
    std::size_t best_order = 1;
    for (Element x = 0; x < a.order(); ++x) {
      if (!rest[x]) continue;
      const std::size_t k = a.element_order(x);
      if (k > best_order) {
        best = x;
        best_order = k;
      }
    }
    const Element gens[] = {best};
    const auto cyclic = subgroup_generated(a, gens);
    std::vector<char> in_cyclic(a.order(), 0);
    for (Element x : cyclic.elements()) in_cyclic[x] = 1;

    // A cyclic subgroup of maximal order is a direct summand; pick the first
    // complement inside the remaining summand.
    const Subgroup* complement = nullptr;
    for (const auto& h : subgroups) {
      if (h.order() * best_order != rest_order) continue;
      if (!is_subset(h.elements(), rest)) continue;
      const bool trivial_meet = std::none_of(h.elements().begin(), h.elements().end(),
                                             [&](Element x) { return x != a.identity() && in_cyclic[x]; });
      if (trivial_meet) {
        complement = &h;
        break;
      }
    }
    if (complement == nullptr)
      throw Error(ErrorCode::Internal, "no complement found while splitting '" + a.label() + "'");

    dec.generators.push_back(best);
    dec.orders.push_back(best_order);
    std::fill(rest.begin(), rest.end(), 0);
    for (Element x : complement->elements()) rest[x] = 1;
    rest_order = complement->order();
  }

  const std::size_t k = dec.generators.size();
  dec.coords.assign(a.order(), std::vector<std::size_t>(k, 0));
  std::vector<std::size_t> c(k, 0);
  for (std::size_t count = 0; count < a.order(); ++count) {
    Element x = a.identity();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t t = 0; t < c[i]; ++t) x = a.mul(x, dec.generators[i]);
    dec.coords[x] = c;
    for (std::size_t i = k; i-- > 0;) {
      if (++c[i] < dec.orders[i]) break;
      c[i] = 0;
    }
  }
  return dec;
}

Complex character(const AbelianDecomposition& dec, Element chi, Element x) {
  // Common denominator: the exponent orders[0] is a multiple of every order.
  if (dec.orders.empty()) return {1.0, 0.0};
  const long long exponent = static_cast<long long>(dec.orders.front());
  long long num = 0;
  for (std::size_t i = 0; i < dec.orders.size(); ++i) {
    const long long scale = exponent / static_cast<long long>(dec.orders[i]);
    num += static_cast<long long>(dec.coords[chi][i] * dec.coords[x][i]) * scale;
    num %= exponent;
  }
  return root_of_unity(num, exponent);
}

}  // namespace latdim
