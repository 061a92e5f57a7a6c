#include "orbitnorm/serialize.hpp"

#include <sstream>

#include "orbitnorm/errors.hpp"

namespace orbitnorm {
namespace {

FormType eps_from_json(const Json& j) { return form_type_from_sign(j.get<int>()); }

Json matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row.push_back(rational_to_string(m(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix matrix_from_json(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) {
    throw ParseError("matrix must have " + std::to_string(n) + " rows");
  }
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) {
      throw ParseError("matrix row " + std::to_string(i) + " has wrong length");
    }
    for (std::size_t k = 0; k < n; ++k) {
      m(i, k) = rational_from_string(j[i][k].get<std::string>());
    }
  }
  return m;
}

}  // namespace

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
  return Partition(j.get<std::vector<int>>());
}

Json to_json(const DegenPair& pair) {
  return Json{{"eps", sign(pair.eps())},
              {"top", to_json(pair.top())},
              {"bottom", to_json(pair.bottom())}};
}

DegenPair degen_pair_from_json(const Json& j) {
  return DegenPair(eps_from_json(j.at("eps")),
                   partition_from_json(j.at("bottom")),
                   partition_from_json(j.at("top")));
}

Json to_json(const ReductionResult& r) {
  return Json{{"core", to_json(r.core)},
              {"r", r.rows},
              {"s", r.columns},
              {"erased_rows", r.erased_rows},
              {"erased_columns", r.erased_columns}};
}

ReductionResult reduction_from_json(const Json& j) {
  return ReductionResult{degen_pair_from_json(j.at("core")),
                         j.at("r").get<int>(), j.at("s").get<int>(),
                         j.at("erased_rows").get<std::vector<int>>(),
                         j.at("erased_columns").get<std::vector<int>>()};
}

Json to_json(const DegenType& t) {
  return Json{{"family", std::string(1, family_letter(t.family))},
              {"n", t.n ? Json(*t.n) : Json(nullptr)},
              {"codim", t.codim_table}};
}

DegenType degen_type_from_json(const Json& j) {
  const auto letter = j.at("family").get<std::string>();
  if (letter.size() != 1) throw ParseError("bad family '" + letter + "'");
  const Json& n = j.at("n");
  return make_type(family_from_letter(letter.front()),
                   n.is_null() ? std::nullopt : std::optional<int>(n.get<int>()));
}

Json to_json(const PosetGraph& g) {
  Json nodes = Json::array();
  for (const auto& p : g.nodes) nodes.push_back(to_json(p));
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    edges.push_back(Json{
        {"top", to_json(e.top)},
        {"bottom", to_json(e.bottom)},
        {"type", e.family ? Json(std::string(1, *e.family)) : Json(nullptr)},
        {"n", e.family_n ? Json(*e.family_n) : Json(nullptr)},
        {"codim", e.codim ? Json(*e.codim) : Json(nullptr)}});
  }
  return Json{{"eps", sign(g.eps)},
              {"n", g.n},
              {"nodes", std::move(nodes)},
              {"edges", std::move(edges)}};
}

std::string to_dot(const PosetGraph& g) {
  std::ostringstream out;
  std::map<Partition, std::size_t> index;
  out << "digraph hasse {\n";
  out << "  label=\"eps=" << to_string(g.eps) << " n=" << g.n << "\";\n";
  out << "  node [shape=box];\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    index.emplace(g.nodes[i], i);
    out << "  n" << i << " [label=\"" << g.nodes[i].to_string() << "\"];\n";
  }
  for (const auto& e : g.edges) {
    out << "  n" << index.at(e.top) << " -> n" << index.at(e.bottom);
    if (e.family && e.codim) {
      out << " [label=\"" << *e.family << ',' << *e.codim << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string rational_to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || sgn(q.get_den()) == 0) {
    throw ParseError("not a rational: '" + s + "'");
  }
  q.canonicalize();
  return q;
}

Json to_json(const NilpotentModel& m) {
  return Json{{"dim", m.dim},
              {"eps", sign(m.eps)},
              {"gram", matrix_to_json(m.gram)},
              {"nilpotent", matrix_to_json(m.nilpotent)}};
}

NilpotentModel nilpotent_model_from_json(const Json& j) {
  const int dim = j.at("dim").get<int>();
  if (dim < 0) throw ParseError("negative dimension");
  const auto n = static_cast<std::size_t>(dim);
  return NilpotentModel{dim, eps_from_json(j.at("eps")),
                        matrix_from_json(j.at("gram"), n),
                        matrix_from_json(j.at("nilpotent"), n)};
}

Json to_json(const Witness& w) {
  Json out{{"sigma", to_json(w.sigma)}};
  const Json reduction = to_json(w.reduction);
  for (const auto& [key, value] : reduction.items()) out[key] = value;
  const Json type = to_json(w.type);
  out["family"] = type["family"];
  out["n"] = type["n"];
  out["codim"] = w.codim;
  if (w.oracle_codim) {
    out["table_codim"] = w.type.codim_table;
    out["oracle_codim"] = *w.oracle_codim;
    out["codim_mismatch"] = *w.oracle_codim != w.type.codim_table;
  }
  return out;
}

Witness witness_from_json(const Json& j) {
  Witness w{partition_from_json(j.at("sigma")), reduction_from_json(j),
            degen_type_from_json(j), j.at("codim").get<int>(), {}};
  if (j.contains("oracle_codim")) w.oracle_codim = j["oracle_codim"].get<int>();
  return w;
}

Json to_json(const NormalityVerdict& v) {
  Json witnesses = Json::array();
  for (const auto& w : v.witnesses) witnesses.push_back(to_json(w));
  return Json{{"eps", sign(v.eta.eps)},
              {"partition", to_json(v.eta.partition)},
              {"verdict", to_string(v.verdict)},
              {"witnesses", std::move(witnesses)}};
}

NormalityVerdict verdict_from_json(const Json& j) {
  NormalityVerdict v{EpsDiagram(partition_from_json(j.at("partition")),
                                eps_from_json(j.at("eps"))),
                     verdict_from_string(j.at("verdict").get<std::string>()),
                     {}};
  for (const auto& w : j.at("witnesses")) {
    v.witnesses.push_back(witness_from_json(w));
  }
  return v;
}

Json to_json(const SurveyResult& s) {
  Json verdicts = Json::array();
  for (const auto& v : s.verdicts) verdicts.push_back(to_json(v));
  return Json{{"eps", sign(s.eps)},
              {"n", s.n},
              {"verdicts", std::move(verdicts)},
              {"summary", Json{{"Normal", s.summary.normal},
                               {"NotNormal", s.summary.not_normal},
                               {"Undetermined", s.summary.undetermined}}}};
}

}  // namespace orbitnorm
