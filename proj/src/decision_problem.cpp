// Copyright 2026 The admlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "admlab/decision_problem.hpp"

#include <set>

#include "admlab/rng.hpp"
#include "json.hpp"

namespace admlab {

HyperPrior to_hyper(const Prior& prior) {
  std::vector<LCNumber> w;
  w.reserve(prior.size());
  for (const auto& x : prior.weights()) w.push_back(LCNumber::from_rational(x));
  return HyperPrior(std::move(w));
}

Mixture::Mixture(std::vector<Rational> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw InputError("mixture has no weights");
  Rational total = 0;
  for (const auto& w : weights_) {
    if (w < 0 || w > 1) throw InputError("mixture weight outside [0,1]: " + to_string(w));
    total += w;
  }
  if (total != 1) throw InputError("mixture weights sum to " + to_string(total) + ", not 1");
}

Mixture Mixture::point_mass(std::size_t size, std::size_t at) {
  std::vector<Rational> w(size, Rational(0));
  w.at(at) = 1;
  return Mixture(std::move(w));
}

DecisionProblem::DecisionProblem(std::vector<std::string> theta_labels,
                                 std::vector<std::string> proc_labels,
                                 std::vector<std::vector<Rational>> risk, bool allow_mixtures,
                                 std::optional<Rational> loss_lower_bound)
    : theta_labels_(std::move(theta_labels)),
      proc_labels_(std::move(proc_labels)),
      allow_mixtures_(allow_mixtures) {
  if (theta_labels_.empty()) throw InputError("theta: at least one parameter is required");
  if (proc_labels_.empty()) throw InputError("procedures: at least one procedure is required");
  if (std::set<std::string>(theta_labels_.begin(), theta_labels_.end()).size() !=
      theta_labels_.size()) {
    throw InputError("theta: duplicate label");
  }
  if (std::set<std::string>(proc_labels_.begin(), proc_labels_.end()).size() !=
      proc_labels_.size()) {
    throw InputError("procedures: duplicate label");
  }
  if (risk.size() != theta_labels_.size()) {
    throw InputError("risk: expected " + std::to_string(theta_labels_.size()) + " rows, got " +
                     std::to_string(risk.size()));
  }
  risk_.reserve(theta_labels_.size() * proc_labels_.size());
  for (std::size_t i = 0; i < risk.size(); ++i) {
    if (risk[i].size() != proc_labels_.size()) {
      throw InputError("risk[" + std::to_string(i) + "]: expected " +
                       std::to_string(proc_labels_.size()) + " entries, got " +
                       std::to_string(risk[i].size()));
    }
    for (auto& r : risk[i]) risk_.push_back(std::move(r));
  }
  const Rational observed_min = *std::min_element(risk_.begin(), risk_.end());
  if (loss_lower_bound) {
    if (observed_min < *loss_lower_bound) {
      throw InputError("loss_lower_bound: risk entry " + to_string(observed_min) +
                       " lies below the declared bound");
    }
    lower_bound_ = *loss_lower_bound;
  } else {
    lower_bound_ = observed_min;
  }
}

std::size_t DecisionProblem::theta_index(std::string_view label) const {
  for (std::size_t i = 0; i < theta_labels_.size(); ++i) {
    if (theta_labels_[i] == label) return i;
  }
  throw InputError("unknown parameter label '" + std::string(label) + "'");
}

std::size_t DecisionProblem::proc_index(std::string_view label) const {
  for (std::size_t i = 0; i < proc_labels_.size(); ++i) {
    if (proc_labels_[i] == label) return i;
  }
  throw InputError("unknown procedure label '" + std::string(label) + "'");
}

std::vector<Rational> DecisionProblem::risk_function(std::size_t proc) const {
  std::vector<Rational> out;
  out.reserve(num_thetas());
  for (std::size_t t = 0; t < num_thetas(); ++t) out.push_back(risk(t, proc));
  return out;
}

void DecisionProblem::add_prior(std::string name, HyperPrior prior) {
  if (prior.size() != num_thetas()) {
    throw InputError("priors." + name + ": expected " + std::to_string(num_thetas()) +
                     " weights");
  }
  priors_.insert_or_assign(std::move(name), std::move(prior));
}

Rational risk_at(const DecisionProblem& p, std::string_view theta, std::string_view proc) {
  return p.risk(p.theta_index(theta), p.proc_index(proc));
}

Rational mixture_risk(const DecisionProblem& p, std::size_t theta, const Mixture& m) {
  if (!p.allow_mixtures()) throw PreconditionError("mixtures are disabled for this problem");
  if (m.size() != p.num_procs()) throw InputError("mixture size does not match procedures");
  Rational total = 0;
  for (std::size_t d = 0; d < m.size(); ++d) total += m[d] * p.risk(theta, d);
  return total;
}

Rational bayes_risk(const DecisionProblem& p, const Prior& prior, std::size_t proc) {
  if (prior.size() != p.num_thetas()) throw InputError("prior size does not match parameters");
  Rational total = 0;
  for (std::size_t t = 0; t < p.num_thetas(); ++t) total += prior[t] * p.risk(t, proc);
  return total;
}

Rational bayes_risk(const DecisionProblem& p, const Prior& prior, const Mixture& m) {
  if (prior.size() != p.num_thetas()) throw InputError("prior size does not match parameters");
  Rational total = 0;
  for (std::size_t t = 0; t < p.num_thetas(); ++t) total += prior[t] * mixture_risk(p, t, m);
  return total;
}

LCNumber bayes_risk(const DecisionProblem& p, const HyperPrior& prior, std::size_t proc) {
  if (prior.size() != p.num_thetas()) throw InputError("prior size does not match parameters");
  LCNumber total;
  for (std::size_t t = 0; t < p.num_thetas(); ++t) {
    total += prior[t] * LCNumber::from_rational(p.risk(t, proc));
  }
  return total;
}

LCNumber bayes_risk(const DecisionProblem& p, const HyperPrior& prior, const Mixture& m) {
  if (prior.size() != p.num_thetas()) throw InputError("prior size does not match parameters");
  LCNumber total;
  for (std::size_t t = 0; t < p.num_thetas(); ++t) {
    total += prior[t] * LCNumber::from_rational(mixture_risk(p, t, m));
  }
  return total;
}

namespace {

using nlohmann::json;

Rational rational_field(const json& value, const std::string& where) {
  if (value.is_string()) {
    const auto& text = value.get_ref<const std::string&>();
    try {
      return parse_rational(text);
    } catch (const InputError&) {
      throw InputError(where + ": non-finite or malformed number '" + text + "'");
    }
  }
  if (value.is_number_integer()) return Rational(value.dump());
  if (value.is_number_float()) return parse_rational(value.dump());
  throw InputError(where + ": expected a rational string or number");
}

std::vector<std::string> label_list(const json& doc, const char* key) {
  if (!doc.contains(key)) throw InputError(std::string(key) + ": missing field");
  const json& arr = doc.at(key);
  if (!arr.is_array()) throw InputError(std::string(key) + ": expected an array of labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_string()) {
      throw InputError(std::string(key) + "[" + std::to_string(i) + "]: expected a string");
    }
    out.push_back(arr[i].get<std::string>());
  }
  return out;
}

}  // namespace

DecisionProblem load_problem(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw InputError(std::string("problem file: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("problem file: top level must be an object");

  auto thetas = label_list(doc, "theta");
  auto procs = label_list(doc, "procedures");

  if (!doc.contains("risk")) throw InputError("risk: missing field");
  const json& rows = doc.at("risk");
  if (!rows.is_array()) throw InputError("risk: expected an array of rows");
  std::vector<std::vector<Rational>> risk;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string row_where = "risk[" + std::to_string(i) + "]";
    if (!rows[i].is_array()) throw InputError(row_where + ": expected an array");
    std::vector<Rational> row;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      row.push_back(rational_field(rows[i][j], row_where + "[" + std::to_string(j) + "]"));
    }
    risk.push_back(std::move(row));
  }

  bool allow_mixtures = true;
  if (doc.contains("allow_mixtures")) {
    if (!doc["allow_mixtures"].is_boolean()) throw InputError("allow_mixtures: expected a boolean");
    allow_mixtures = doc["allow_mixtures"].get<bool>();
  }
  std::optional<Rational> lower;
  if (doc.contains("loss_lower_bound")) {
    lower = rational_field(doc["loss_lower_bound"], "loss_lower_bound");
  }

  DecisionProblem problem(std::move(thetas), std::move(procs), std::move(risk), allow_mixtures,
                          lower);

  if (doc.contains("priors")) {
    const json& priors = doc["priors"];
    if (!priors.is_object()) throw InputError("priors: expected an object of named priors");
    for (const auto& [name, body] : priors.items()) {
      const std::string where = "priors." + name;
      if (!body.is_object()) throw InputError(where + ": expected an object theta -> weight");
      std::vector<LCNumber> weights(problem.num_thetas());
      for (const auto& [label, w] : body.items()) {
        const std::size_t t = problem.theta_index(label);
        if (w.is_string()) {
          weights[t] = LCNumber::parse(w.get<std::string>());
        } else {
          weights[t] = LCNumber::from_rational(rational_field(w, where + "." + label));
        }
      }
      try {
        problem.add_prior(name, HyperPrior(std::move(weights)));
      } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
      }
    }
  }
  return problem;
}

std::string save_problem(const DecisionProblem& p) {
  json doc;
  doc["theta"] = p.theta_labels();
  doc["procedures"] = p.proc_labels();
  json rows = json::array();
  for (std::size_t t = 0; t < p.num_thetas(); ++t) {
    json row = json::array();
    for (std::size_t d = 0; d < p.num_procs(); ++d) row.push_back(to_string(p.risk(t, d)));
    rows.push_back(std::move(row));
  }
  doc["risk"] = std::move(rows);
  doc["allow_mixtures"] = p.allow_mixtures();
  doc["loss_lower_bound"] = to_string(p.loss_lower_bound());
  if (!p.priors().empty()) {
    json priors = json::object();
    for (const auto& [name, prior] : p.priors()) {
      json body = json::object();
      for (std::size_t t = 0; t < p.num_thetas(); ++t) {
        body[p.theta_labels()[t]] = prior[t].to_string();
      }
      priors[name] = std::move(body);
    }
    doc["priors"] = std::move(priors);
  }
  return doc.dump(2) + "\n";
}

DecisionProblem random_problem(std::size_t num_thetas, std::size_t num_procs, std::uint64_t seed,
                               bool allow_mixtures) {
  if (num_thetas < 1 || num_procs < 1) throw InputError("problem sizes must be at least 1");
  PhiloxEngine rng(seed, /*stream=*/0x5052u, /*shard=*/0);
  std::vector<std::string> thetas;
  std::vector<std::string> procs;
  for (std::size_t i = 0; i < num_thetas; ++i) thetas.push_back("t" + std::to_string(i + 1));
  for (std::size_t j = 0; j < num_procs; ++j) procs.push_back("d" + std::to_string(j));
  std::vector<std::vector<Rational>> risk(num_thetas);
  for (auto& row : risk) {
    for (std::size_t j = 0; j < num_procs; ++j) {
      Rational r(static_cast<long>(rng.below(kRandomRiskGrid + 1)), kRandomRiskGrid);
      r.canonicalize();
      row.push_back(r);
    }
  }
  return DecisionProblem(std::move(thetas), std::move(procs), std::move(risk), allow_mixtures);
}

}  // namespace admlab
