#include "gme/classify.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "gme/tangle.hpp"
#include "gme/wclass.hpp"

namespace gme {

const char* to_string(SloccClass c) {
  switch (c) {
    case SloccClass::ABC: return "A-B-C";
    case SloccClass::A_BC: return "A-BC";
    case SloccClass::B_AC: return "B-AC";
    case SloccClass::AB_C: return "AB-C";
    case SloccClass::W: return "W";
    case SloccClass::GHZ: return "GHZ";
  }
  return "?";
}

SloccClassification slocc_class(const PureState& s, double rank_tol,
                                double tau_tol) {
  if (s.dims != std::vector<int>{2, 2, 2}) {
    throw ShapeError("slocc_class: requires a three-qubit state");
  }
  SloccClassification r;
  for (int j = 0; j < 3; ++j) {
    Matrix rho = reduced_density(s, {j});
    EigResult e = eig_hermitian(rho);
    int rank = 0;
    for (int i = 0; i < e.values.size(); ++i) {
      if (e.values[i] > rank_tol) ++rank;
      if (std::abs(e.values[i] - rank_tol) < 10 * rank_tol) r.borderline = true;
    }
    r.local_ranks[j] = rank;
  }
  const auto& rk = r.local_ranks;
  if (rk == std::array<int, 3>{1, 1, 1}) {
    r.label = SloccClass::ABC;
    return r;
  }
  if (rk == std::array<int, 3>{1, 2, 2}) {
    r.label = SloccClass::A_BC;
    return r;
  }
  if (rk == std::array<int, 3>{2, 1, 2}) {
    r.label = SloccClass::B_AC;
    return r;
  }
  if (rk == std::array<int, 3>{2, 2, 1}) {
    r.label = SloccClass::AB_C;
    return r;
  }
  r.tau = three_tangle(normalize(s));
  if (std::abs(r.tau - tau_tol) < 10 * tau_tol) r.borderline = true;
  r.label = (r.tau > tau_tol) ? SloccClass::GHZ : SloccClass::W;
  return r;
}

namespace {

std::string cut_digits(const Cut& cut) {
  std::vector<int> l = cut.left;
  std::sort(l.begin(), l.end());
  std::string out;
  for (int j : l) out += static_cast<char>('0' + j);
  return out;
}

Cut parse_cut_digits(const std::string& digits, int n_parties) {
  Cut cut;
  for (char ch : digits) {
    if (ch < '0' || ch > '9') {
      throw DomainError("set spec: bad party digit '" + std::string(1, ch) + "'");
    }
    cut.left.push_back(ch - '0');
  }
  validate_cut(cut, n_parties);
  return cut;
}

}  // namespace

std::string SISetId::name() const {
  switch (kind) {
    case Kind::Product: return "product";
    case Kind::WClosure: return "w";
    case Kind::GhzClosure: return "ghz";
    case Kind::CutSet: return "cut:" + cut_digits(cut);
    case Kind::RankK: return "rank:" + cut_digits(cut) + ":" + std::to_string(k);
    case Kind::Union: {
      std::string out = "union:";
      for (size_t i = 0; i < members.size(); ++i) {
        if (i) out += ",";
        out += members[i].name();
      }
      return out;
    }
  }
  return "?";
}

SISetId SISetId::parse(const std::string& spec, int n_parties) {
  SISetId id;
  if (spec == "product") {
    id.kind = Kind::Product;
    return id;
  }
  if (spec == "w") {
    id.kind = Kind::WClosure;
    return id;
  }
  if (spec == "ghz") {
    id.kind = Kind::GhzClosure;
    return id;
  }
  if (spec.rfind("cut:", 0) == 0) {
    id.kind = Kind::CutSet;
    id.cut = parse_cut_digits(spec.substr(4), n_parties);
    return id;
  }
  if (spec.rfind("rank:", 0) == 0) {
    std::string rest = spec.substr(5);
    auto colon = rest.find(':');
    if (colon == std::string::npos) {
      throw DomainError("set spec: rank:<cut>:<k> expected");
    }
    id.kind = Kind::RankK;
    id.cut = parse_cut_digits(rest.substr(0, colon), n_parties);
    try {
      id.k = std::stoi(rest.substr(colon + 1));
    } catch (const std::exception&) {
      throw DomainError("set spec: bad k in rank spec");
    }
    if (id.k < 1) throw DomainError("set spec: k must be >= 1");
    return id;
  }
  if (spec.rfind("union:", 0) == 0) {
    id.kind = Kind::Union;
    std::string rest = spec.substr(6);
    size_t pos = 0;
    while (pos <= rest.size()) {
      size_t comma = rest.find(',', pos);
      std::string piece = rest.substr(pos, comma - pos);
      if (piece.empty()) throw DomainError("set spec: empty union member");
      SISetId member = parse(piece, n_parties);
      if (member.kind == Kind::Union) {
        throw DomainError("set spec: nested unions not supported");
      }
      id.members.push_back(std::move(member));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (id.members.empty()) throw DomainError("set spec: empty union");
    std::set<std::string> names;
    for (const auto& m : id.members) {
      if (!names.insert(m.name()).second) {
        throw DomainError("set spec: duplicate union member " + m.name());
      }
    }
    return id;
  }
  throw DomainError("set spec: unrecognized '" + spec + "'");
}

MeasureResult measure(const PureState& s, const SISetId& set,
                      const OptConfig& cfg) {
  switch (set.kind) {
    case SISetId::Kind::Product:
      return nearest_product(s, cfg);
    case SISetId::Kind::WClosure:
      return e_w(s, cfg);
    case SISetId::Kind::GhzClosure: {
      MeasureResult r;
      r.e_value = e_ghz_set(s);
      r.d_value = 0.0;
      r.witness = normalize(s);  // any state is a limit of GHZ-set states
      r.starts_agreeing = 1;
      return r;
    }
    case SISetId::Kind::CutSet:
    case SISetId::Kind::RankK: {
      int k = (set.kind == SISetId::Kind::CutSet) ? 1 : set.k;
      MeasureResult r;
      r.e_value = e_rank_k(s, set.cut, k);
      r.d_value = d_from_e(r.e_value);
      r.witness = closest_rank_k(s, set.cut, k);
      r.starts_agreeing = 1;
      return r;
    }
    case SISetId::Kind::Union: {
      MeasureResult best;
      bool first = true;
      for (const auto& m : set.members) {
        MeasureResult r = measure(s, m, cfg);
        if (first || r.e_value < best.e_value) {
          best = std::move(r);
          first = false;
        }
      }
      return best;
    }
  }
  throw DomainError("measure: unknown set kind");
}

MeasureFn make_measure_fn(const SISetId& set, const OptConfig& cfg) {
  return [set, cfg](const PureState& s) { return measure(s, set, cfg).e_value; };
}

NestingReport nesting_check(const PureState& s, const OptConfig& cfg) {
  if (s.dims != std::vector<int>{2, 2, 2}) {
    throw ShapeError("nesting_check: requires a three-qubit state");
  }
  NestingReport r;
  r.e_product = nearest_product(s, cfg).e_value;
  for (int j = 0; j < 3; ++j) {
    r.e_cuts[j] = e_rank_k(s, Cut{{j}}, 1);
  }
  r.e_w_value = e_w(s, cfg).e_value;
  r.holds = true;
  for (double ec : r.e_cuts) {
    if (r.e_product < ec - r.slack) r.holds = false;
  }
  if (r.e_product < r.e_w_value - r.slack) r.holds = false;
  return r;
}

}  // namespace gme
