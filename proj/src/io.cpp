#include "symshuffle/io.hpp"

#include <stdexcept>

namespace symshuffle {

namespace {

Json rational_list(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

std::vector<Rational> parse_list(const Json& j) {
  std::vector<Rational> v;
  for (const auto& x : j) v.push_back(parse_rational(x.get<std::string>()));
  return v;
}

}  // namespace

Json spec_to_json(const ShuffleSpec& spec) {
  Json j;
  j["kind"] = spec.kind_name();
  j["reversed"] = spec.reversed;
  if (const auto* m = std::get_if<BiasedRiffle>(&spec.model)) {
    j["q"] = rational_list(m->q);
  } else if (const auto* m = std::get_if<TypeCShuffle>(&spec.model)) {
    j["y"] = rational_list(m->y);
  } else if (const auto* m = std::get_if<AbgShuffle>(&spec.model)) {
    j["alpha"] = rational_list(m->params.alpha);
    j["beta"] = rational_list(m->params.beta);
    j["gamma"] = to_string(m->params.gamma);
  } else if (const auto* m = std::get_if<MuShuffle>(&spec.model)) {
    j["mu"] = m->mu;
  } else {
    j["iterations"] = std::get<TopToRandom>(spec.model).iterations;
  }
  return j;
}

ShuffleSpec spec_from_json(const Json& j) {
  const auto kind = j.at("kind").get<std::string>();
  const bool reversed = j.value("reversed", false);
  if (kind == "biased-riffle") return ShuffleSpec::biased_riffle(parse_list(j.at("q")), reversed);
  if (kind == "typeC") return ShuffleSpec::type_c(parse_list(j.at("y")), reversed);
  if (kind == "abg") {
    ParamVector p{parse_list(j.at("alpha")), parse_list(j.at("beta")),
                  parse_rational(j.at("gamma").get<std::string>())};
    return ShuffleSpec::abg(std::move(p), reversed);
  }
  if (kind == "mu") return ShuffleSpec::mu(j.at("mu").get<std::vector<int>>(), reversed);
  if (kind == "top-to-random") return ShuffleSpec::top_to_random(j.at("iterations").get<int>(), reversed);
  throw std::invalid_argument("unknown shuffle kind: " + kind);
}

Json distribution_to_json(const PermDistribution& d, const ShuffleSpec& spec) {
  Json j;
  j["n"] = d.n();
  j["spec"] = spec_to_json(spec);
  Json w = Json::object();
  for (const auto& [perm, p] : d.weights()) w[perm.to_string()] = to_string(p);
  j["weights"] = std::move(w);
  return j;
}

std::pair<ShuffleSpec, PermDistribution> distribution_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  PermDistribution d(n);
  for (const auto& [key, value] : j.at("weights").items()) {
    d.add(n == 0 ? Permutation() : Permutation::parse(key), parse_rational(value.get<std::string>()));
  }
  return {spec_from_json(j.at("spec")), std::move(d)};
}

Json series_to_json(const TruncatedSeries& s) {
  Json j;
  j["order"] = s.order();
  Json terms = Json::array();
  for (int n = 0; n <= s.order(); ++n) {
    for (const auto& [m, c] : s[n].terms()) {
      Json mono = Json::object();
      for (std::size_t i = 1; i < m.size(); ++i) {
        if (m[i] != 0) mono[std::to_string(i)] = m[i];
      }
      if (!m.empty() && m[0] != 0) mono["t"] = m[0];
      terms.push_back(Json{{"n", n}, {"monomial", std::move(mono)}, {"coeff", to_string(c)}});
    }
  }
  j["terms"] = std::move(terms);
  return j;
}

TruncatedSeries series_from_json(const Json& j) {
  TruncatedSeries s(j.at("order").get<int>());
  for (const auto& term : j.at("terms")) {
    const int n = term.at("n").get<int>();
    if (n < 0 || n > s.order()) throw std::invalid_argument("series term outside the order");
    std::vector<int> e;
    for (const auto& [key, value] : term.at("monomial").items()) {
      const std::size_t idx = key == "t" ? 0 : static_cast<std::size_t>(std::stoul(key));
      if (e.size() <= idx) e.resize(idx + 1, 0);
      e[idx] = value.get<int>();
    }
    s[n].add_term(make_monomial(e), parse_rational(term.at("coeff").get<std::string>()));
  }
  return s;
}

}  // namespace symshuffle
