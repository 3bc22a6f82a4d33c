#include "cli.hpp"

#include <algorithm>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "monideal/monideal.hpp"
#include "render.hpp"

namespace monideal::cli {

namespace {

// Witness depth used when cross-checking closures.
constexpr std::uint64_t kWitnessDepth = 6;

class VerifyMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check(bool ok, const std::string& what) {
  if (!ok) throw VerifyMismatch(what);
}

std::string read_literal(const std::string& text, std::istream& in) {
  if (text != "-") return text;
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::uint64_t require(const std::optional<std::uint64_t>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  if (*v == 0) throw UsageError(std::string(flag) + " must be at least 1");
  return *v;
}

const char* yes_no(bool v) { return v ? "true" : "false"; }

json envelope(const Command& cmd, const MonomialIdeal& ideal) {
  return json{{"schema", kSchemaVersion}, {"verb", cmd.verb}, {"input", to_json(ideal)}};
}

// Grid comparison of `result` against the multiset definition of I^k.
void verify_power(const MonomialIdeal& ideal, std::uint64_t k, const MonomialIdeal& result) {
  const oracle::GridBox box{ideal.dim(), std::max(result.max_exponent(),
                                                  detail::checked_mul(ideal.max_exponent(), k))};
  bool ok = true;
  oracle::for_each_point(box, [&](const Monomial& m) {
    if (ok && oracle::power_contains(ideal, m, k) != result.contains(m)) ok = false;
  });
  check(ok, "power disagrees with the multiset oracle");
}

// No box point outside the closure may have a power witness, and the closure
// must contain the ideal.
void verify_closure(const MonomialIdeal& ideal, const MonomialIdeal& closure) {
  check(is_subideal(ideal, closure), "closure does not contain the ideal");
  const Monomial box = ideal.generator_lcm();
  bool ok = true;
  oracle::for_each_point({ideal.dim(), box.max_exponent()}, [&](const Monomial& m) {
    if (!ok || !divides(m, box) || closure.contains(m)) return;
    if (oracle::closure_witness(ideal, m, kWitnessDepth)) ok = false;
  });
  check(ok, "a monomial outside the closure has a power witness");
}

void verify_decomposition_of(const MonomialIdeal& ideal, const Decomposition& d) {
  check(oracle::verify_decomposition(ideal, d), "components do not intersect to the ideal");
  check(oracle::verify_irredundant(d), "decomposition is redundant");
  check(decompose(ideal, SplitRule::LargestVariable) == d,
        "split rules produced different decompositions");
}

void verify_symbolic(const MonomialIdeal& ideal, std::uint64_t k, const MonomialIdeal& result) {
  const MonomialIdeal ordinary = power(ideal, k);
  check(is_subideal(ordinary, result), "symbolic power does not contain the ordinary power");
  if (is_squarefree_ideal(ideal)) {
    check(symbolic_power_general(ideal, k) == symbolic_power_squarefree(ideal, k),
          "general and squarefree symbolic powers differ");
  }
}

int execute(const Command& cmd, std::istream& in, std::ostream& out) {
  const std::string ideal_text = read_literal(cmd.ideal, in);
  std::optional<std::size_t> dim = cmd.dim;
  if (cmd.verb == "member" && !dim) {
    // Share one ambient dimension between the two literals.
    dim = std::max(parse_ideal(ideal_text).dim(), parse_monomial(cmd.monomial).dim());
  }
  const MonomialIdeal ideal = parse_ideal(ideal_text, dim);
  const Notation notation = cmd.unicode ? Notation::Unicode : Notation::Ascii;
  json doc = envelope(cmd, ideal);
  std::ostringstream text;

  if (cmd.verb == "decompose") {
    const Decomposition d = decompose(ideal);
    if (cmd.verify) verify_decomposition_of(ideal, d);
    doc.update(to_json(d));
    text << to_string(d, notation) << '\n';
  } else if (cmd.verb == "radical") {
    const MonomialIdeal r = radical(ideal);
    if (cmd.verify) check(oracle::grid_radical(ideal) == r, "radical disagrees with the grid oracle");
    doc["result"] = to_json(r);
    text << to_string(r) << '\n';
  } else if (cmd.verb == "ass" || cmd.verb == "minass") {
    const Decomposition d = decompose(ideal);
    if (cmd.verify) verify_decomposition_of(ideal, d);
    const std::vector<PrimeSupport> primes =
        cmd.verb == "ass" ? ass(d) : minimal_supports(ass(d));
    doc["primes"] = to_json(primes);
    text << to_string(primes) << '\n';
  } else if (cmd.verb == "power") {
    const std::uint64_t k = require(cmd.k, "--k");
    const MonomialIdeal p = power(ideal, k);
    if (cmd.verify) verify_power(ideal, k, p);
    doc["k"] = k;
    doc["result"] = to_json(p);
    text << to_string(p) << '\n';
  } else if (cmd.verb == "symbolic") {
    const std::uint64_t k = require(cmd.k, "--k");
    const bool squarefree = is_squarefree_ideal(ideal);
    const MonomialIdeal s = symbolic_power(ideal, k);
    if (cmd.verify) verify_symbolic(ideal, k, s);
    doc["k"] = k;
    doc["method"] = squarefree ? "squarefree" : "general";
    doc["result"] = to_json(s);
    text << to_string(s) << '\n';
    if (!squarefree) {
      text << "note: intersection of the merged primary components of I^k at the minimal primes of I\n";
    }
  } else if (cmd.verb == "eq-powers") {
    if (cmd.k.has_value() == cmd.max_k.has_value()) {
      throw UsageError("eq-powers takes exactly one of --k or --K");
    }
    if (cmd.k) {
      const std::uint64_t k = require(cmd.k, "--k");
      const PowerReport r = powers_equal(ideal, k);
      const bool closed = is_integrally_closed(r.ordinary);
      if (cmd.verify) {
        verify_symbolic(ideal, k, r.symbolic);
        if (is_squarefree_ideal(ideal)) {
          check(r.equal == r.ass_condition, "power equality and the Ass condition disagree");
        }
      }
      doc["report"] = to_json(r);
      doc["normal_at_k"] = closed;
      text << power_table({{k, r.equal, r.ass_condition, closed}});
      text << "ordinary: " << to_string(r.ordinary) << '\n';
      text << "symbolic: " << to_string(r.symbolic) << '\n';
      text << "ass(I^k): " << to_string(r.ass_ordinary) << '\n';
      text << "minass(I): " << to_string(r.min_ass_base) << '\n';
    } else {
      const std::uint64_t max_k = require(cmd.max_k, "--K");
      const EquivalenceReport r = check_power_equivalence(ideal, max_k);
      if (cmd.verify) check(r.passed(), "power equivalence check failed");
      std::vector<TableRow> rows;
      for (const EquivalenceRow& row : r.rows) {
        const bool closed = row.closed ? *row.closed : is_integrally_closed(power(ideal, row.k));
        rows.push_back({row.k, row.powers_equal, row.ass_condition, closed});
      }
      doc["report"] = to_json(r);
      text << power_table(rows);
      text << "equivalence (equal <=> ass_condition): " << (r.equivalence_holds ? "holds" : "FAILS")
           << '\n';
      if (r.normality_holds) {
        text << "condition holds for k <= " << max_k << "; powers integrally closed and equal to "
             << "the intersection of prime powers: " << yes_no(*r.normality_holds) << '\n';
        text << "note: for squarefree ideals, equality of all symbolic and ordinary powers implies "
                "normality; the table itself certifies k <= "
             << max_k << " only\n";
      }
    }
  } else if (cmd.verb == "closure") {
    const MonomialIdeal c = integral_closure(ideal);
    if (cmd.verify) verify_closure(ideal, c);
    doc["result"] = to_json(c);
    text << to_string(c) << '\n';
  } else if (cmd.verb == "normal") {
    const std::uint64_t max_k = require(cmd.max_k, "--K");
    const NormalityReport r = is_normal_up_to(ideal, max_k);
    if (cmd.verify) {
      for (std::uint64_t k = 1; k <= r.checked_up_to; ++k) {
        const MonomialIdeal p = power(ideal, k);
        verify_closure(p, integral_closure(p));
      }
    }
    doc["report"] = to_json(r);
    text << "normal up to K=" << max_k << ": " << yes_no(r.normal);
    if (r.first_failure) text << " (first failure at k=" << *r.first_failure << ")";
    text << "\nnote: bounded certificate; says nothing about k > " << r.checked_up_to << '\n';
  } else if (cmd.verb == "member") {
    const Monomial m = parse_monomial(cmd.monomial, ideal.dim());
    const bool member = ideal.contains(m);
    if (cmd.verify && !ideal.is_zero()) {
      const Decomposition d = decompose(ideal);
      const bool in_all = std::all_of(d.components.begin(), d.components.end(),
                                      [&](const ParametricIdeal& q) { return q.contains(m); });
      check(in_all == member, "membership disagrees with the decomposition");
    }
    doc["monomial"] = to_string(m);
    doc["member"] = member;
    text << yes_no(member) << '\n';
  } else if (cmd.verb == "irreducible") {
    const bool irreducible = is_irreducible(ideal);
    if (cmd.verify) {
      const Decomposition d = decompose(ideal);
      check(irreducible == (d.components.size() == 1 && d.components.front().to_ideal() == ideal),
            "irreducibility disagrees with the decomposition");
    }
    doc["irreducible"] = irreducible;
    text << yes_no(irreducible) << '\n';
  } else if (cmd.verb == "verify-variants") {
    const Decomposition smallest = decompose(ideal, SplitRule::SmallestVariable);
    const Decomposition largest = decompose(ideal, SplitRule::LargestVariable);
    std::vector<Monomial> reversed(ideal.generators().rbegin(), ideal.generators().rend());
    const Decomposition shuffled = decompose_generators(ideal.dim(), std::move(reversed));
    const bool identical = smallest == largest && smallest == shuffled;
    const bool sound = oracle::verify_decomposition(ideal, smallest);
    const bool irredundant = oracle::verify_irredundant(smallest);
    doc.update(to_json(smallest));
    doc["identical"] = identical;
    doc["oracle_agrees"] = sound;
    doc["irredundant"] = irredundant;
    text << to_string(smallest, notation) << '\n'
         << "identical across split rules: " << yes_no(identical) << '\n'
         << "grid oracle agrees: " << yes_no(sound) << '\n'
         << "irredundant: " << yes_no(irredundant) << '\n';
    check(identical && sound && irredundant, "decomposition variants disagree");
  } else {
    throw UsageError("unknown verb '" + cmd.verb + "'");
  }

  if (cmd.json) {
    out << doc.dump() << '\n';
  } else {
    out << text.str();
  }
  return kOk;
}

}  // namespace

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> kVerbs = {
      "decompose", "radical", "ass",    "minass", "power",       "symbolic",
      "eq-powers", "closure", "normal", "member", "irreducible", "verify-variants"};
  return kVerbs;
}

int run(const Command& cmd, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    return execute(cmd, in, out);
  } catch (const VerifyMismatch& e) {
    err << "verification mismatch: " << e.what() << '\n';
    return kVerifyMismatch;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Monomial ideals: decompositions, radicals, symbolic powers, integral closure",
               "monideal"};
  app.require_subcommand(1);

  Command cmd;
  std::size_t dim = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("ideal", cmd.ideal, "ideal literal such as \"(x1^2*x3, x2)\", or - for stdin")
        ->required();
    sub->add_option("--dim", dim, "ambient dimension (default: largest variable index)")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--json", cmd.json, "emit JSON");
    sub->add_flag("--verify", cmd.verify, "cross-check the result with a brute-force oracle");
    sub->add_flag("--unicode", cmd.unicode, "join decomposition components with U+2229");
  };
  static const std::map<std::string, std::string> kHelp = {
      {"decompose", "irreducible decomposition"},
      {"radical", "radical"},
      {"ass", "associated prime supports"},
      {"minass", "minimal prime supports"},
      {"power", "ordinary power I^k"},
      {"symbolic", "symbolic power I^(k)"},
      {"eq-powers", "compare symbolic and ordinary powers (--k) or tabulate k <= K (--K)"},
      {"closure", "integral closure"},
      {"normal", "check that I^k is integrally closed for k <= K"},
      {"member", "monomial membership"},
      {"irreducible", "irreducibility"},
      {"verify-variants", "decompose under every split rule and check with the oracle"},
  };
  for (const std::string& verb : verbs()) {
    CLI::App* sub = app.add_subcommand(verb, kHelp.at(verb));
    add_common(sub);
    if (verb == "member") {
      sub->add_option("monomial", cmd.monomial, "monomial literal such as x1*x3^2")->required();
    }
    if (verb == "power" || verb == "symbolic" || verb == "eq-powers") {
      sub->add_option("--k", cmd.k, "power");
    }
    if (verb == "normal" || verb == "eq-powers") {
      sub->add_option("--K", cmd.max_k, "largest power checked");
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  cmd.verb = app.get_subcommands().front()->get_name();
  if (dim != 0) cmd.dim = dim;
  return run(cmd, in, out, err);
}

}  // namespace monideal::cli
