#include "tropval/multmap.hpp"

#include "tropval/detail/scan.hpp"

namespace tropval {

MultMap make_table_map(CarrierPtr source, CarrierPtr target, std::vector<Elem> table,
                       MapKind kind, std::string label) {
  if (!source->finite() || table.size() != source->size())
    throw PreconditionError("make_table_map: table/source mismatch");
  MultMap m;
  m.source = std::move(source);
  m.target = std::move(target);
  m.table = std::move(table);
  auto tbl = std::make_shared<std::vector<Elem>>(*m.table);
  m.fn = [tbl](const Elem& a) { return (*tbl)[static_cast<std::size_t>(fin(a))]; };
  m.kind = kind;
  m.label = std::move(label);
  return m;
}

MultMap make_fn_map(CarrierPtr source, CarrierPtr target, MapFn fn, MapKind kind,
                    std::string label) {
  MultMap m;
  m.source = std::move(source);
  m.target = std::move(target);
  m.fn = std::move(fn);
  m.kind = kind;
  m.label = std::move(label);
  return m;
}

MultMap identity_map(CarrierPtr c) {
  MultMap m;
  m.source = c;
  m.target = c;
  if (c->finite()) {
    m.table = all_elements(*c);
  }
  m.fn = [](const Elem& a) { return a; };
  m.section = [](const Elem& a) { return a; };
  m.kind = MapKind::Homomorphism;
  m.label = "id_" + c->name();
  m.from = MultMap::From::Identity;
  return m;
}

MultMap compose(const MultMap& g, const MultMap& f) {
  if (g.source.get() != f.target.get())
    throw PreconditionError("compose: middle carriers differ");
  MultMap m;
  m.source = f.source;
  m.target = g.target;
  if (f.table) {
    std::vector<Elem> tbl;
    tbl.reserve(f.table->size());
    for (const Elem& e : *f.table) tbl.push_back(g.fn(e));
    m.table = std::move(tbl);
    auto shared = std::make_shared<std::vector<Elem>>(*m.table);
    m.fn = [shared](const Elem& a) { return (*shared)[static_cast<std::size_t>(fin(a))]; };
  } else {
    MapFn gf = g.fn, ff = f.fn;
    m.fn = [gf, ff](const Elem& a) { return gf(ff(a)); };
  }
  if (f.section && g.section) {
    MapFn fs = f.section, gs = g.section;
    m.section = [fs, gs](const Elem& a) { return fs(gs(a)); };
  }
  m.kind = MapKind::Mult01;
  m.label = g.label + " . " + f.label;
  return m;
}

Report check_mult01(const MultMap& v, std::size_t budget, std::uint64_t seed) {
  Report rep;
  const Carrier& s = *v.source;
  const Carrier& t = *v.target;
  rep.add("maps 0 to 0", t.is_zero(v(s.zero())));
  rep.add("maps 1 to 1", t.is_one(v(s.one())));
  auto pp = detail::make_pairs(s, budget, seed);
  rep.exhaustive = pp.exhaustive;
  std::string wit;
  bool ok = detail::scan_pairs(
      pp, [&](const Elem& a, const Elem& b) { return t.eq(v(s.mul(a, b)), t.mul(v(a), v(b))); },
      &wit, s);
  rep.add("multiplicative", ok, ok ? "" : "witness " + wit);
  return rep;
}

bool surjective_onto_finite(const MultMap& v) {
  if (!v.target->finite() || !v.source->finite()) return false;
  std::vector<bool> hit(v.target->size(), false);
  for (const Elem& e : all_elements(*v.source)) hit[static_cast<std::size_t>(fin(v(e)))] = true;
  for (bool h : hit)
    if (!h) return false;
  return true;
}

}  // namespace tropval
