#include "posg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

namespace posg::cli {

namespace {

std::vector<std::pair<std::string, std::uint64_t>> spec_params(
    const GroupSpec& spec) {
  switch (spec.family) {
    case Family::Symmetric:
    case Family::Dihedral:
    case Family::GeneralizedQuaternion:
      return {{"n", spec.a}};
    case Family::Cyclic:
      return {{"m", spec.a}};
    case Family::CyclicPower2Product:
      return {{"alpha", spec.a}, {"t", spec.b}};
  }
  return {};
}

std::string join_violations(const PosVerdict& v) {
  std::string out;
  for (const auto& [order, count] : v.violations) {
    if (!out.empty()) out += ';';
    out += to_decimal(order) + ':' + to_decimal(count);
  }
  return out;
}

}  // namespace

OutputRecord OutputRecord::for_spec(const GroupSpec& spec) {
  OutputRecord rec;
  rec.family = family_name(spec.family);
  rec.params = spec_params(spec);
  rec.order = group_order(spec);
  return rec;
}

Json record_to_json(const OutputRecord& record) {
  Json j;
  j["family"] = record.family;
  Json params = Json::object();
  for (const auto& [name, value] : record.params) params[name] = value;
  j["params"] = params;
  j["order"] = to_decimal(record.order);
  if (record.spectrum) {
    Json rows = Json::array();
    for (const auto& [order, count] : record.spectrum->entries)
      rows.push_back(
          Json{{"order", to_decimal(order)}, {"count", to_decimal(count)}});
    j["spectrum"] = rows;
  }
  if (record.verdict) {
    j["pos"] = record.verdict->is_pos;
    Json rows = Json::array();
    for (const auto& [order, count] : record.verdict->violations)
      rows.push_back(
          Json{{"order", to_decimal(order)}, {"count", to_decimal(count)}});
    j["violations"] = rows;
  }
  if (!record.evidence.is_null()) j["evidence"] = record.evidence;
  return j;
}

std::string record_to_csv(const OutputRecord& record, bool header) {
  std::ostringstream out;
  std::string prefix = record.family;
  std::string param_names;
  for (const auto& [name, value] : record.params) {
    param_names += ',' + name;
    prefix += ',' + std::to_string(value);
  }
  if (record.spectrum) {
    if (header) out << "family" << param_names << ",order,count\n";
    for (const auto& [order, count] : record.spectrum->entries)
      out << prefix << ',' << to_decimal(order) << ',' << to_decimal(count)
          << '\n';
    return out.str();
  }
  if (header) out << "family" << param_names << ",order,pos,violations\n";
  out << prefix << ',' << to_decimal(record.order) << ','
      << (record.verdict && record.verdict->is_pos ? "true" : "false") << ','
      << (record.verdict ? join_violations(*record.verdict) : "") << '\n';
  return out.str();
}

std::string record_to_table(const OutputRecord& record) {
  std::ostringstream out;
  out << "group: " << record.family << '(';
  for (std::size_t i = 0; i < record.params.size(); ++i) {
    if (i) out << ", ";
    out << record.params[i].first << '=' << record.params[i].second;
  }
  out << ")  order: " << to_decimal(record.order) << '\n';
  if (record.spectrum) {
    std::size_t width = 5;
    for (const auto& [order, count] : record.spectrum->entries)
      width = std::max(width, to_decimal(order).size());
    out << "order";
    for (std::size_t i = 5; i < width; ++i) out << ' ';
    out << "  count\n";
    for (const auto& [order, count] : record.spectrum->entries) {
      const std::string o = to_decimal(order);
      out << o;
      for (std::size_t i = o.size(); i < width; ++i) out << ' ';
      out << "  " << to_decimal(count) << '\n';
    }
  }
  if (record.verdict) {
    out << "pos: " << (record.verdict->is_pos ? "true" : "false") << '\n';
    if (!record.verdict->is_pos) {
      out << "violations:";
      for (const auto& [order, count] : record.verdict->violations)
        out << " (" << to_decimal(order) << ", " << to_decimal(count) << ')';
      out << '\n';
    }
  }
  return out.str();
}

Json lemma_report_to_json(const LemmaReport& report) {
  Json j;
  j["lemma"] = lemma_name(report.lemma);
  j["p"] = report.p;
  j["r"] = report.r;
  j["n"] = report.n;
  Json terms = Json::array();
  for (const auto& t : report.term_counts) terms.push_back(to_decimal(t));
  j["term_counts"] = terms;
  j["d"] = to_decimal(report.d);
  j["A"] = to_decimal(report.a);
  if (report.lemma == LemmaId::Lemma33) j["M"] = to_decimal(report.m);
  Json residues = Json::object();
  for (const auto& [label, value] : report.residue_checks)
    residues[label] = value;
  j["residues"] = residues;
  j["residues_as_claimed"] = report.residues_as_claimed;
  j["gcd"] = to_decimal(report.gcd_value);
  j["gcd_claim_holds"] = report.gcd_claim_holds;
  j["inequality_holds"] = report.inequality_holds;
  j["identities_hold"] = report.identities_hold;
  j["contradiction"] =
      Json{{"numerator", to_decimal(report.contradiction_numerator)},
           {"denominator", to_decimal(report.contradiction_denominator)},
           {"integral", report.contradiction_integral}};
  j["divides"] = report.divides;
  j["known_anomaly"] = report.known_anomaly;
  j["claims_hold"] = report.claims_hold();
  return j;
}

Json theorem_evidence_to_json(const TheoremEvidence& evidence) {
  Json j;
  j["n"] = evidence.n;
  j["non_pos"] = evidence.non_pos;
  std::string route;
  if (evidence.assignment)
    route = lemma_name(evidence.assignment->lemma);
  else if (evidence.report)
    route = evidence.anomaly_fallback ? "lemma3.1+spectrum-fallback"
                                      : "lemma3.1";
  else
    route = "spectrum";
  j["route"] = route;
  if (evidence.assignment)
    j["assignment"] = Json{{"m", evidence.assignment->m},
                           {"p", evidence.assignment->p},
                           {"r", evidence.assignment->r},
                           {"lemma", lemma_name(evidence.assignment->lemma)}};
  if (evidence.report) j["report"] = lemma_report_to_json(*evidence.report);
  if (evidence.spectrum_witness)
    j["witness"] =
        Json{{"order", to_decimal(evidence.spectrum_witness->first)},
             {"count", to_decimal(evidence.spectrum_witness->second)}};
  j["anomaly_fallback"] = evidence.anomaly_fallback;
  return j;
}

// ---------------------------------------------------------------------------
// command driver
// ---------------------------------------------------------------------------

namespace {

struct FamilyOptions {
  std::string family;
  std::uint64_t n = 0, m = 0, alpha = 0, t = 0;
  bool has_n = false, has_m = false, has_alpha = false, has_t = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family, "group family")
        ->required()
        ->check(CLI::IsMember(
            {"symmetric", "cyclic", "z2power", "dihedral", "quaternion"}));
    cmd->add_option("--n", n, "degree / parameter n")
        ->each([this](const std::string&) { has_n = true; });
    cmd->add_option("--m", m, "cyclic modulus")
        ->each([this](const std::string&) { has_m = true; });
    cmd->add_option("--alpha", alpha, "z2power exponent alpha")
        ->each([this](const std::string&) { has_alpha = true; });
    cmd->add_option("--t", t, "z2power factor count t")
        ->each([this](const std::string&) { has_t = true; });
  }

  GroupSpec to_spec() const {
    if (family == "symmetric") {
      if (!has_n) throw ParameterError("symmetric requires --n");
      return GroupSpec::symmetric(n);
    }
    if (family == "cyclic") {
      if (!has_m) throw ParameterError("cyclic requires --m");
      return GroupSpec::cyclic(m);
    }
    if (family == "z2power") {
      if (!has_alpha || !has_t)
        throw ParameterError("z2power requires --alpha and --t");
      return GroupSpec::cyclic_power2_product(alpha, t);
    }
    if (family == "dihedral") {
      if (!has_n) throw ParameterError("dihedral requires --n");
      return GroupSpec::dihedral(n);
    }
    if (!has_n) throw ParameterError("quaternion requires --n");
    return GroupSpec::generalized_quaternion(n);
  }
};

void emit_record(const OutputRecord& record, const std::string& format,
                 std::ostream& out) {
  if (format == "json")
    out << record_to_json(record).dump(2) << '\n';
  else if (format == "csv")
    out << record_to_csv(record, /*header=*/true);
  else
    out << record_to_table(record);
}

// ---- verify machinery: one line per case, fail counting ----

struct VerifyStream {
  std::ostream& out;
  bool json = false;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::uint64_t anomalies = 0;

  void lemma_case(const LemmaReport& rep) {
    ++cases;
    const bool ok = rep.claims_hold();
    const char* tag = ok ? (rep.known_anomaly ? "KNOWN-ANOMALY" : "OK") : "FAIL";
    if (rep.known_anomaly && ok) ++anomalies;
    if (!ok) ++failures;
    if (json) {
      Json j = lemma_report_to_json(rep);
      j["status"] = tag;
      out << j.dump() << '\n';
      return;
    }
    out << lemma_name(rep.lemma) << " p=" << rep.p;
    if (rep.lemma != LemmaId::Lemma33) out << " r=" << rep.r;
    out << " n=" << rep.n << ": d=" << to_decimal(rep.d)
        << " divides=" << (rep.divides ? "true" : "false")
        << " residues=" << (rep.residues_as_claimed ? "ok" : "BAD")
        << " gcd=" << to_decimal(rep.gcd_value)
        << " inequality=" << (rep.inequality_holds ? "ok" : "no")
        << " identities=" << (rep.identities_hold ? "ok" : "BAD");
    if (rep.lemma == LemmaId::Lemma33)
      out << " C=" << to_decimal(rep.contradiction_numerator) << '/'
          << to_decimal(rep.contradiction_denominator)
          << (rep.contradiction_integral ? " (integral)" : " (non-integral)");
    out << " -> " << tag << '\n';
  }

  void line(bool ok, const std::string& text, const Json& jcase) {
    ++cases;
    if (!ok) ++failures;
    if (json) {
      Json j = jcase;
      j["status"] = ok ? "OK" : "FAIL";
      out << j.dump() << '\n';
    } else {
      out << text << " -> " << (ok ? "OK" : "FAIL") << '\n';
    }
  }

  int finish(const std::string& target) {
    if (json) {
      out << Json{{"target", target},
                  {"cases", cases},
                  {"failures", failures},
                  {"known_anomalies", anomalies}}
                 .dump()
          << '\n';
    } else {
      out << "verify " << target << ": " << cases << " cases, " << failures
          << " failures, " << anomalies << " known anomalies\n";
    }
    return failures == 0 ? kExitOk : kExitClaimMismatch;
  }
};

std::vector<std::uint64_t> odd_primes_up_to(std::uint64_t p_max) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 3; p <= p_max; p += 2)
    if (is_prime(p)) primes.push_back(p);
  return primes;
}

struct VerifyOptions {
  std::string target;
  std::string format = "text";
  std::uint64_t p = 0;
  bool has_p = false;
  std::int64_t r = -1;  // -1: all r
  std::uint64_t p_max = 19;
  std::uint64_t n_max = 0;  // 0: per-target default
  std::uint64_t n_min = 0;
  std::uint64_t alpha = 0, t = 0;
  bool has_alpha = false, has_t = false;
  std::uint64_t budget = kDefaultEnumerationBudget;
};

int run_verify(const VerifyOptions& opt, std::ostream& out) {
  VerifyStream vs{out, opt.format == "json"};

  const auto lemma_driver = [&](LemmaId id) {
    const auto verify = [&](std::uint64_t p, std::uint64_t r) {
      switch (id) {
        case LemmaId::Lemma31: vs.lemma_case(verify_lemma_3_1(p, r)); break;
        case LemmaId::Lemma32: vs.lemma_case(verify_lemma_3_2(p, r)); break;
        case LemmaId::Lemma33: vs.lemma_case(verify_lemma_3_3(p)); break;
      }
    };
    const auto each_r = [&](std::uint64_t p) {
      if (id == LemmaId::Lemma33) {
        verify(p, 0);
      } else if (opt.r >= 0) {
        verify(p, static_cast<std::uint64_t>(opt.r));
      } else {
        for (std::uint64_t r = 0; r < p; ++r) verify(p, r);
      }
    };
    if (opt.has_p) {
      each_r(opt.p);
    } else {
      for (auto p : odd_primes_up_to(opt.p_max)) each_r(p);
    }
  };

  if (opt.target == "lemma3.1") {
    lemma_driver(LemmaId::Lemma31);
  } else if (opt.target == "lemma3.2") {
    lemma_driver(LemmaId::Lemma32);
  } else if (opt.target == "lemma3.3") {
    lemma_driver(LemmaId::Lemma33);
  } else if (opt.target == "thm3.1") {
    const std::uint64_t n_max = opt.n_max ? opt.n_max : 100;
    for (std::uint64_t n = 4; n <= n_max; ++n) {
      const auto ev = verify_theorem_3_1(n);
      Json j = theorem_evidence_to_json(ev);
      std::ostringstream text;
      text << "thm3.1 n=" << n << ": route=" << j["route"].get<std::string>();
      if (ev.spectrum_witness)
        text << " witness=(" << to_decimal(ev.spectrum_witness->first) << ','
             << to_decimal(ev.spectrum_witness->second) << ')';
      if (ev.report && ev.report->known_anomaly) text << " [KNOWN-ANOMALY]";
      vs.line(ev.non_pos, text.str(), j);
    }
  } else if (opt.target == "thm2.1") {
    const std::uint64_t n_max = opt.n_max ? opt.n_max : 2187;
    for (std::uint64_t n = 2; n <= n_max; ++n) {
      const auto c = classify_dihedral(n);
      const bool ok = c.verdict.is_pos == c.predicted_pos;
      std::ostringstream text;
      text << "thm2.1 n=" << n
           << ": pos=" << (c.verdict.is_pos ? "true" : "false")
           << " rule=" << (c.predicted_pos ? "true" : "false");
      vs.line(ok, text.str(),
              Json{{"n", n},
                   {"pos", c.verdict.is_pos},
                   {"rule", c.predicted_pos}});
    }
  } else if (opt.target == "prop2.1") {
    const auto run_case = [&](std::uint64_t alpha, std::uint64_t t) {
      const auto ev = verify_prop_2_1(alpha, t, opt.budget);
      std::ostringstream text;
      text << "prop2.1 alpha=" << alpha << " t=" << t
           << ": count(2^alpha)=" << to_decimal(ev.count_max_order)
           << " formula=" << to_decimal(ev.formula)
           << " divides=" << (ev.count_divides_order ? "true" : "false")
           << (ev.brute_checked ? " brute=checked" : "");
      vs.line(ev.claims_hold(), text.str(),
              Json{{"alpha", alpha},
                   {"t", t},
                   {"count", to_decimal(ev.count_max_order)},
                   {"formula", to_decimal(ev.formula)},
                   {"pos", ev.pos},
                   {"brute_checked", ev.brute_checked}});
    };
    if (opt.has_alpha || opt.has_t) {
      if (!(opt.has_alpha && opt.has_t))
        throw ParameterError("prop2.1 needs both --alpha and --t");
      run_case(opt.alpha, opt.t);
    } else {
      const std::uint64_t max_exp = opt.n_max ? opt.n_max : 20;
      for (std::uint64_t t = 2; t <= max_exp; ++t)
        for (std::uint64_t alpha = 1; alpha * t <= max_exp; ++alpha)
          run_case(alpha, t);
    }
  } else if (opt.target == "prop2.2") {
    const std::uint64_t lo = opt.n_min ? opt.n_min : 3;
    const std::uint64_t hi = opt.n_max ? opt.n_max : 16;
    const auto summary = verify_quaternion(lo, hi);
    for (const auto& qc : summary.cases) {
      std::ostringstream text;
      text << "prop2.2 n=" << qc.n
           << ": count(4)=" << to_decimal(qc.count_order4)
           << " formula=" << to_decimal(qc.formula)
           << " pos=" << (qc.pos ? "true" : "false");
      vs.line(qc.formula_matches && !qc.pos, text.str(),
              Json{{"n", qc.n},
                   {"count4", to_decimal(qc.count_order4)},
                   {"formula", to_decimal(qc.formula)},
                   {"pos", qc.pos}});
    }
  } else if (opt.target == "coverage") {
    const std::uint64_t n_max = opt.n_max ? opt.n_max : 100000;
    for (std::uint64_t n = 8; n <= n_max; ++n) {
      const auto c = assign_case(n);
      const bool ok = c.m < c.p && c.p < 2 * c.m && c.r < c.p;
      std::ostringstream text;
      text << "coverage n=" << n << ": p=" << c.p
           << " lemma=" << lemma_name(c.lemma) << " r=" << c.r;
      vs.line(ok, text.str(),
              Json{{"n", n},
                   {"m", c.m},
                   {"p", c.p},
                   {"lemma", lemma_name(c.lemma)},
                   {"r", c.r}});
    }
  } else if (opt.target == "wilson") {
    const std::uint64_t p_max = opt.p_max ? opt.p_max : 1000;
    for (std::uint64_t v = 2; v <= p_max; ++v) {
      const std::uint64_t res = wilson_residue(v);
      const bool prime = is_prime(v);
      // primes must satisfy the congruence, composites must fail it
      const bool ok = prime ? res == v - 1 : res != v - 1;
      std::ostringstream text;
      text << "wilson " << (prime ? "p=" : "c=") << v << ": residue=" << res;
      vs.line(ok, text.str(),
              Json{{"value", v}, {"prime", prime}, {"residue", res}});
    }
  } else {
    throw ParameterError("unknown verify target: " + opt.target);
  }
  return vs.finish(opt.target);
}

// ---- scan ----

struct ScanOptions {
  std::string family;
  std::uint64_t from = 0, to = 0;
  std::uint64_t t = 0;
  bool has_t = false;
  std::string format = "csv";
  std::string out_path;
  unsigned jobs = 1;
};

GroupSpec scan_spec(const ScanOptions& opt, std::uint64_t value) {
  if (opt.family == "symmetric") return GroupSpec::symmetric(value);
  if (opt.family == "cyclic") return GroupSpec::cyclic(value);
  if (opt.family == "dihedral") return GroupSpec::dihedral(value);
  if (opt.family == "quaternion")
    return GroupSpec::generalized_quaternion(value);
  if (!opt.has_t) throw ParameterError("z2power scan requires --t");
  return GroupSpec::cyclic_power2_product(value, opt.t);
}

int run_scan(const ScanOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.from > opt.to)
    throw ParameterError("scan range is empty (--from > --to)");
  const std::uint64_t count = opt.to - opt.from + 1;
  std::vector<std::string> rows(count);

  const auto make_row = [&](std::uint64_t idx) {
    const auto spec = scan_spec(opt, opt.from + idx);
    OutputRecord rec = OutputRecord::for_spec(spec);
    rec.verdict = check_pos(spec);
    rows[idx] = opt.format == "jsonl" ? record_to_json(rec).dump() + "\n"
                                      : record_to_csv(rec, /*header=*/false);
  };

  const unsigned jobs =
      std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(count)));
  if (jobs == 1) {
    for (std::uint64_t i = 0; i < count; ++i) make_row(i);
  } else {
    // static striping; rows land at their index so output order is fixed
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (unsigned w = 0; w < jobs; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::uint64_t i = w; i < count; i += jobs) make_row(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!opt.out_path.empty()) {
    file.open(opt.out_path);
    if (!file) {
      err << "cannot open " << opt.out_path << " for writing\n";
      return kExitIoFailure;
    }
    sink = &file;
  }
  if (opt.format == "csv") {
    OutputRecord sample = OutputRecord::for_spec(scan_spec(opt, opt.from));
    sample.verdict = PosVerdict{};
    const std::string with_header = record_to_csv(sample, /*header=*/true);
    *sink << with_header.substr(0, with_header.find('\n') + 1);
  }
  for (const auto& row : rows) *sink << row;
  sink->flush();
  if (!*sink) {
    err << "write failure\n";
    return kExitIoFailure;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"order spectra, POS verdicts and proof verification for "
               "symmetric, cyclic, (Z_2^a)^t, dihedral and generalized "
               "quaternion groups"};
  app.require_subcommand(1);

  // spectrum
  auto* cmd_spectrum = app.add_subcommand(
      "spectrum", "print the order spectrum of one group");
  FamilyOptions spectrum_family;
  spectrum_family.attach(cmd_spectrum);
  std::string spectrum_method = "closed";
  std::string spectrum_format = "table";
  std::uint64_t spectrum_budget = kDefaultEnumerationBudget;
  unsigned spectrum_jobs = 1;
  cmd_spectrum->add_option("--method", spectrum_method)
      ->check(CLI::IsMember({"closed", "brute", "both"}));
  cmd_spectrum->add_option("--format", spectrum_format)
      ->check(CLI::IsMember({"json", "csv", "table"}));
  cmd_spectrum->add_option("--budget", spectrum_budget,
                           "enumeration budget for brute force");
  cmd_spectrum->add_option("--jobs", spectrum_jobs,
                           "worker threads for brute force");

  // check
  auto* cmd_check =
      app.add_subcommand("check", "decide the POS property of one group");
  FamilyOptions check_family;
  check_family.attach(cmd_check);
  std::string check_expect;
  std::string check_format = "table";
  bool check_cross = false;
  std::uint64_t check_budget = kDefaultEnumerationBudget;
  cmd_check->add_option("--expect", check_expect,
                        "fail (exit 1) unless the verdict matches")
      ->check(CLI::IsMember({"pos", "non-pos"}));
  cmd_check->add_option("--format", check_format)
      ->check(CLI::IsMember({"json", "csv", "table"}));
  cmd_check->add_flag("--cross-check", check_cross,
                      "also brute force the spectrum and compare");
  cmd_check->add_option("--budget", check_budget);

  // verify
  auto* cmd_verify = app.add_subcommand(
      "verify", "re-check the counting claims of one result");
  VerifyOptions vopt;
  cmd_verify
      ->add_option("target", vopt.target,
                   "one of prop2.1 thm2.1 prop2.2 lemma3.1 lemma3.2 "
                   "lemma3.3 thm3.1 coverage wilson")
      ->required();
  cmd_verify->add_option("--p", vopt.p)->each([&vopt](const std::string&) {
    vopt.has_p = true;
  });
  cmd_verify->add_option("--r", vopt.r);
  cmd_verify->add_option("--p-max", vopt.p_max);
  cmd_verify->add_option("--n-max", vopt.n_max);
  cmd_verify->add_option("--n-min", vopt.n_min);
  cmd_verify->add_option("--alpha", vopt.alpha)
      ->each([&vopt](const std::string&) { vopt.has_alpha = true; });
  cmd_verify->add_option("--t", vopt.t)->each([&vopt](const std::string&) {
    vopt.has_t = true;
  });
  cmd_verify->add_option("--budget", vopt.budget);
  cmd_verify->add_option("--format", vopt.format)
      ->check(CLI::IsMember({"text", "json"}));

  // scan
  auto* cmd_scan = app.add_subcommand(
      "scan", "POS verdicts over a parameter range, one row per value");
  ScanOptions sopt;
  cmd_scan->add_option("--family", sopt.family)
      ->required()
      ->check(CLI::IsMember(
          {"symmetric", "cyclic", "z2power", "dihedral", "quaternion"}));
  cmd_scan->add_option("--from", sopt.from)->required();
  cmd_scan->add_option("--to", sopt.to)->required();
  cmd_scan->add_option("--t", sopt.t, "t for z2power scans (alpha varies)")
      ->each([&sopt](const std::string&) { sopt.has_t = true; });
  cmd_scan->add_option("--jobs", sopt.jobs);
  cmd_scan->add_option("--format", sopt.format)
      ->check(CLI::IsMember({"csv", "jsonl"}));
  cmd_scan->add_option("--out", sopt.out_path, "output file (default stdout)");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("posg");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitBadArguments;
  }

  try {
    if (cmd_spectrum->parsed()) {
      const auto spec = spectrum_family.to_spec();
      OrderSpectrum sp;
      if (spectrum_method == "closed") {
        sp = spectrum_closed_form(spec);
      } else if (spectrum_method == "brute") {
        sp = spectrum_bruteforce(spec, spectrum_budget, spectrum_jobs);
      } else {
        sp = spectrum_closed_form(spec);
        const auto brute =
            spectrum_bruteforce(spec, spectrum_budget, spectrum_jobs);
        if (brute != sp) {
          err << "oracle mismatch: closed-form and brute-force spectra "
                 "disagree for "
              << spec.describe() << '\n';
          return kExitClaimMismatch;
        }
      }
      OutputRecord rec = OutputRecord::for_spec(spec);
      rec.spectrum = sp;
      rec.verdict = verdict_from_spectrum(sp);
      emit_record(rec, spectrum_format, out);
      return kExitOk;
    }

    if (cmd_check->parsed()) {
      const auto spec = check_family.to_spec();
      OutputRecord rec = OutputRecord::for_spec(spec);
      rec.verdict = check_pos(spec, check_cross, check_budget);
      emit_record(rec, check_format, out);
      if (!check_expect.empty()) {
        const bool want_pos = check_expect == "pos";
        if (rec.verdict->is_pos != want_pos) {
          err << "expectation failed: " << spec.describe() << " is "
              << (rec.verdict->is_pos ? "POS" : "not POS") << '\n';
          return kExitClaimMismatch;
        }
      }
      return kExitOk;
    }

    if (cmd_verify->parsed()) return run_verify(vopt, out);
    if (cmd_scan->parsed()) return run_scan(sopt, out, err);
  } catch (const BudgetError& e) {
    err << "budget refusal: " << e.what() << '\n';
    return kExitBudgetRefusal;
  } catch (const ParameterError& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kExitBadArguments;
  } catch (const IncompatibleElementsError& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kExitBadArguments;
  } catch (const std::ios_base::failure& e) {
    err << "i/o failure: " << e.what() << '\n';
    return kExitIoFailure;
  }
  return kExitBadArguments;
}

}  // namespace posg::cli
