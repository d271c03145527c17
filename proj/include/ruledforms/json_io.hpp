#pragma once

// JSON encoding of curve types, divisors, surface classes, presentations,
// topology results and deformation-class keys. Malformed documents raise
// ParseError; well-formed documents that violate a domain invariant raise the
// corresponding ruledforms::Error.

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ruledforms/classify.hpp"
#include "ruledforms/curve_top.hpp"
#include "ruledforms/pic_symbolic.hpp"
#include "ruledforms/presentation.hpp"
#include "ruledforms/topology.hpp"

namespace ruledforms {

using Json = nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw ParseError(std::string("missing field '") + name + "'");
  }
  return j.at(name);
}

inline int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + name + "' must be an integer");
  return v.get<int>();
}

inline std::string string_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_string()) throw ParseError(std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

}  // namespace detail

// --- curve types and divisors ----------------------------------------------

inline std::string eps_name(DividingType e) {
  return e == DividingType::Dividing ? "dividing" : "nondividing";
}

inline DividingType parse_eps(const std::string& s) {
  if (s == "dividing") return DividingType::Dividing;
  if (s == "nondividing") return DividingType::NonDividing;
  throw ParseError("eps must be \"dividing\" or \"nondividing\", got \"" + s + "\"");
}

inline Json to_json(const CurveTopType& c) {
  return Json{{"g", c.g}, {"mu", c.mu}, {"eps", eps_name(c.eps)}};
}

inline CurveTopType curve_from_json(const Json& j) {
  return {detail::int_field(j, "g"), detail::int_field(j, "mu"),
          parse_eps(detail::string_field(j, "eps"))};
}

inline Json to_json(const PointLabel& p) {
  Json kind;
  if (const auto* r = std::get_if<RealOn>(&p.kind)) {
    kind["real"] = r->component;
  } else {
    kind["nonreal"] = std::get<NonReal>(p.kind).partner;
  }
  return Json{{"id", p.id}, {"kind", kind}};
}

inline PointLabel point_from_json(const Json& j, const CurveTopType& curve) {
  auto id = detail::string_field(j, "id");
  const Json& kind = detail::field(j, "kind");
  if (kind.is_object() && kind.contains("real")) {
    return real_point(curve, id, detail::int_field(kind, "real"));
  }
  if (kind.is_object() && kind.contains("nonreal")) {
    return conjugate_pair(curve, id, detail::string_field(kind, "nonreal")).first;
  }
  throw ParseError("point kind must be {\"real\":int} or {\"nonreal\":string}");
}

inline Json to_json(const Divisor& d) {
  Json arr = Json::array();
  for (const auto& [id, term] : d.terms()) {
    arr.push_back(Json{{"point", to_json(term.point)}, {"coeff", term.coeff}});
  }
  return arr;
}

/// Divisors do not carry their curve in JSON; the caller supplies it.
inline Divisor divisor_from_json(const Json& j, const CurveTopType& curve) {
  if (!j.is_array()) throw ParseError("divisor must be an array");
  Divisor d;
  for (const auto& term : j) {
    const Json& c = detail::field(term, "coeff");
    if (!c.is_number_integer()) throw ParseError("coeff must be an integer");
    d.add_term(point_from_json(detail::field(term, "point"), curve), c.get<std::int64_t>());
  }
  return d;
}

inline Json to_json(const LineBundleRep& l) { return to_json(l.divisor); }

inline Json to_json(const PicSurfaceExpr& e) { return Json{{"a", e.a}, {"m", to_json(e.m)}}; }

// --- presentations ----------------------------------------------------------

inline Json to_json(const ReferenceStructure& s) {
  if (std::holds_alternative<ProductConjOdd>(s)) return Json{{"kind", "product_conj_odd"}};
  if (const auto* split = std::get_if<SplitPM>(&s)) {
    return Json{{"kind", "split_pm"}, {"plus_set", split->plus_set}};
  }
  const auto& eb = std::get<EmptyBase>(s);
  return Json{{"kind", "empty_base"},
              {"label", eb.label == EmptyBaseLabel::ConjLike ? "conj_like" : "c0_like"}};
}

inline ReferenceStructure structure_from_json(const Json& j) {
  const auto kind = detail::string_field(j, "kind");
  if (kind == "product_conj_odd") return ProductConjOdd{};
  if (kind == "split_pm") {
    const Json& plus = detail::field(j, "plus_set");
    if (!plus.is_array()) throw ParseError("plus_set must be an array of integers");
    SplitPM s;
    for (const auto& c : plus) {
      if (!c.is_number_integer()) throw ParseError("plus_set must be an array of integers");
      s.plus_set.insert(c.get<int>());
    }
    return s;
  }
  if (kind == "empty_base") {
    const auto label = detail::string_field(j, "label");
    if (label == "conj_like") return EmptyBase{EmptyBaseLabel::ConjLike};
    if (label == "c0_like") return EmptyBase{EmptyBaseLabel::C0Like};
    throw ParseError("label must be \"conj_like\" or \"c0_like\"");
  }
  throw ParseError("unknown structure kind \"" + kind + "\"");
}

inline Json to_json(const Locus& l) {
  if (const auto* rp = std::get_if<RealPoint>(&l)) return Json{{"real", rp->component}};
  return "conjpair";
}

inline Locus locus_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "conjpair") return ConjPair{};
  if (j.is_object() && j.contains("real")) return RealPoint{detail::int_field(j, "real")};
  throw ParseError("locus must be {\"real\":int} or \"conjpair\"");
}

/// Transforms are written in canonical multiset order: real loci by
/// component then rank, conjugate pairs last.
inline Json to_json(const Presentation& p) {
  Json transforms = Json::array();
  for (const auto& [rec, count] : p.transforms()) {
    transforms.push_back(Json{{"locus", to_json(rec.locus)}, {"rank", rec.rank}, {"count", count}});
  }
  return Json{{"base", to_json(p.base())},
              {"n", p.n()},
              {"structure", to_json(p.structure())},
              {"transforms", transforms}};
}

inline Presentation presentation_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("presentation must be a JSON object");
  const auto base = curve_from_json(detail::field(j, "base"));
  const int n = detail::int_field(j, "n");
  auto structure = structure_from_json(detail::field(j, "structure"));
  TransformMultiset t;
  if (j.contains("transforms")) {
    const Json& arr = j.at("transforms");
    if (!arr.is_array()) throw ParseError("transforms must be an array");
    for (const auto& item : arr) {
      ElemTransformRec rec{locus_from_json(detail::field(item, "locus")),
                           detail::int_field(item, "rank")};
      const int count = item.contains("count") ? detail::int_field(item, "count") : 1;
      if (count < 1) throw ParseError("count must be at least 1");
      t[rec] += count;
    }
  }
  return Presentation(base, n, std::move(structure), std::move(t));
}

// --- topology ---------------------------------------------------------------

inline std::string status_name(ComponentStatus s) {
  switch (s) {
    case ComponentStatus::None: return "none";
    case ComponentStatus::Orientable: return "orientable";
    case ComponentStatus::NonOrientable: return "nonorientable";
  }
  return "none";
}

inline Json to_json(const Quintuple& q) {
  return Json{{"t", q.t}, {"k", q.k}, {"g", q.g}, {"mu", q.mu}, {"eps", eps_name(q.eps)}};
}

inline Json to_json(const RealPartTopology& r) {
  Json statuses = Json::array();
  for (auto s : r.statuses) statuses.push_back(status_name(s));
  return Json{{"statuses", statuses}, {"t", r.t}, {"k", r.k}};
}

inline Json to_json(const QuotientClass& q) {
  return Json{{"d2n", q.d2n.value}, {"q", q.q}};
}

// --- keys -------------------------------------------------------------------

inline Json to_json(const DefClassKey& key) {
  if (const auto* k = std::get_if<OddDimKey>(&key)) {
    return Json{{"variant", "odd_dim"}, {"curve", to_json(k->curve)}, {"n", k->n}, {"d", k->d}};
  }
  if (const auto* k = std::get_if<EvenDimRealBaseKey>(&key)) {
    return Json{{"variant", "even_dim_real_base"}, {"curve", to_json(k->curve)}, {"n", k->n},
                {"t", k->t}, {"k", k->k}, {"d", k->d}};
  }
  const auto& k = std::get<EvenDimEmptyBaseKey>(key);
  return Json{{"variant", "even_dim_empty_base"}, {"curve", to_json(k.curve)}, {"n", k.n},
              {"d", k.d}, {"q", k.q}};
}

inline DefClassKey key_from_json(const Json& j) {
  const auto variant = detail::string_field(j, "variant");
  const auto curve = curve_from_json(detail::field(j, "curve"));
  const int n = detail::int_field(j, "n");
  const int d = detail::int_field(j, "d");
  if (variant == "odd_dim") return OddDimKey{curve, n, d};
  if (variant == "even_dim_real_base") {
    return EvenDimRealBaseKey{curve, n, detail::int_field(j, "t"), detail::int_field(j, "k"), d};
  }
  if (variant == "even_dim_empty_base") {
    return EvenDimEmptyBaseKey{curve, n, d, detail::int_field(j, "q")};
  }
  throw ParseError("unknown key variant \"" + variant + "\"");
}

/// Sort order of enumerate output: (t, k, d, q), with the curve first.
inline auto enumeration_order(const DefClassKey& key) {
  return std::visit(
      [](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        int t = 0, kk = 0, q = 0;
        if constexpr (std::is_same_v<K, EvenDimRealBaseKey>) {
          t = k.t;
          kk = k.k;
        }
        if constexpr (std::is_same_v<K, EvenDimEmptyBaseKey>) q = k.q;
        return std::make_tuple(k.curve, k.n, t, kk, k.d, q);
      },
      key);
}

}  // namespace ruledforms
