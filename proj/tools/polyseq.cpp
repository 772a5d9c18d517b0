// polyseq: tables, identity verification, oracle diffs and valuation reports
// for poly-Bernoulli, polycosecant and polycotangent numbers.
//
// Exit codes: 0 pass, 1 fail, 2 usage or hypothesis error.

#include <polyseq/polyseq.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace polyseq;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

Family family_arg(const std::string& name) {
  auto f = parse_family(name);
  if (!f) throw UsageError("unknown family '" + name + "' (PolyB_B, PolyB_C, Cosecant, Cotangent, TildeD)");
  return *f;
}

void apply_truncation_env() {
  const char* env = std::getenv("POLYSEQ_TRUNCATION");
  if (!env || !*env) return;
  auto order = parse_int(env);
  if (order < 2) throw UsageError("POLYSEQ_TRUNCATION must be at least 2");
  set_oracle_truncation(static_cast<std::size_t>(order));
}

// Accepts "key=value", "--key value" and "--key=value".
Params parse_params(const std::vector<std::string>& args) {
  Params out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string a = args[i];
    if (a.rfind("--", 0) == 0) a = a.substr(2);
    auto eq = a.find('=');
    std::string key, val;
    if (eq != std::string::npos) {
      key = a.substr(0, eq);
      val = a.substr(eq + 1);
    } else {
      if (i + 1 >= args.size()) throw UsageError("missing value for '" + a + "'");
      key = a;
      val = args[++i];
    }
    if (key.empty()) throw UsageError("empty parameter name");
    out[key] = parse_int(val);
  }
  return out;
}

int run_table(const std::string& family, const std::string& n, const std::string& k,
              const std::string& format) {
  auto t = make_table(family_arg(family), parse_range(n), parse_range(k));
  std::cout << render(t, parse_format(format));
  return kPass;
}

// perturb=i shifts instance i before comparing; a pass then becomes exit 1.
int run_verify(const std::string& id, const std::vector<std::string>& extras) {
  Params params = parse_params(extras);
  VerifyOptions options;
  if (auto it = params.find("perturb"); it != params.end()) {
    if (it->second < 0) throw UsageError("perturb must be a non-negative instance index");
    options.perturb = static_cast<std::size_t>(it->second);
    params.erase(it);
  }
  Report r = verify(id, params, options);
  std::cout << report_json(r).dump(2) << '\n';
  return r.pass ? kPass : kFail;
}

int run_oracle_diff(const std::string& family, std::int64_t nmax, std::int64_t kmin,
                    std::int64_t kmax) {
  if (nmax < 0 || nmax > kMaxTableOrder) throw UsageError("nmax out of range");
  if (kmin > kmax || kmin < -kMaxTableWeight || kmax > kMaxTableWeight)
    throw UsageError("weight range out of range");
  Family f = family_arg(family);
  if (f == Family::TildeD && kmax > 0) throw UsageError("TildeD needs non-positive weights");
  OracleDiff d = oracle_diff(f, nmax, kmin, kmax);
  std::cout << family_name(f) << ": " << d.cells << " cells, " << d.comparisons << " comparisons";
  if (d.single_method) std::cout << " (single method)";
  std::cout << '\n';
  if (d.mismatch) {
    const auto& m = *d.mismatch;
    std::cout << "mismatch at n=" << m.n << " k=" << m.k << ": " << m.method << " gives "
              << to_string(m.closed) << ", series gives " << to_string(m.series) << '\n';
    return kFail;
  }
  std::cout << "all methods agree\n";
  return kPass;
}

int run_valuation(std::int64_t p, const std::string& n) {
  if (p < 3 || !is_prime(p)) throw UsageError("p must be an odd prime");
  auto range = parse_range(n);
  if (range.lo < 1) throw UsageError("n must be >= 1 (the order is 2n)");
  for (auto i = range.lo; i <= range.hi; ++i) {
    ValuationReport r = valuation_report(p, i);
    std::cout << "p=" << r.p << " 2n=" << 2 * r.n << " ord_p(b)=" << r.ord_b
              << " ord_p(d)=" << r.ord_d << " ord_p(beta_hat)=" << r.ord_beta_hat
              << " branch=" << (r.p_minus_1_divides ? "(p-1)|2n" : "(p-1)!|2n")
              << " alpha=" << r.alpha << " gamma=" << r.gamma << '\n';
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tables and identity checks for poly-Bernoulli type numbers"};
  app.require_subcommand(1);

  std::string family, n_range, k_range, format = "csv";
  auto* table = app.add_subcommand("table", "Print a table of a family");
  table->add_option("--family", family, "PolyB_B, PolyB_C, Cosecant, Cotangent or TildeD")->required();
  table->add_option("--n", n_range, "order range a..b")->required();
  table->add_option("--k", k_range, "weight range a..b")->required();
  table->add_option("--format", format, "csv, json or latex");

  std::string identity;
  auto* verify_cmd = app.add_subcommand("verify", "Verify an identity: verify ID key=value ... [perturb=i]");
  verify_cmd->add_option("identity", identity, "identity id")->required();
  verify_cmd->allow_extras();
  bool list = false;
  auto* list_cmd = app.add_subcommand("list", "List registered identities");
  list_cmd->callback([&] { list = true; });

  std::int64_t nmax = 0, kmin = 0, kmax = 0;
  auto* oracle = app.add_subcommand("oracle-diff", "Compare closed forms with series extraction");
  oracle->add_option("--family", family)->required();
  oracle->add_option("--nmax", nmax)->required();
  oracle->add_option("--kmin", kmin)->required();
  oracle->add_option("--kmax", kmax)->required();

  std::int64_t p = 0;
  auto* valuation = app.add_subcommand("valuation", "p-adic orders of denominators at order 2n");
  valuation->add_option("--p", p, "odd prime")->required();
  valuation->add_option("--n", n_range, "half-order range a..b")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    apply_truncation_env();
    if (*table) return run_table(family, n_range, k_range, format);
    if (*verify_cmd) return run_verify(identity, verify_cmd->remaining());
    if (list) {
      for (const auto& info : registry()) {
        std::cout << info.id << "  {";
        for (std::size_t i = 0; i < info.params.size(); ++i)
          std::cout << (i ? "," : "") << info.params[i];
        std::cout << "}  " << info.description << '\n';
      }
      return kPass;
    }
    if (*oracle) return run_oracle_diff(family, nmax, kmin, kmax);
    if (*valuation) return run_valuation(p, n_range);
  } catch (const HypothesisViolation& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const MissingParameter& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const UnknownIdentity& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
