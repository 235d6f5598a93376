//
// Command-line front end.  Reports go to stdout as JSON; human-readable
// summaries to stderr.  Exit codes: 0 success/true, 1 false/absent,
// 2 input error, 3 internal error (a failed certificate self-check).
//
#include "adq/adequacy.hpp"
#include "adq/io.hpp"
#include "adq/oracle.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

using adq::io::Json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

adq::oracle::Options oracle_options_from_env() {
  adq::oracle::Options opt;
  if (const char* s = std::getenv("ADQ_ORACLE_DET_BOUND")) {
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (end == s || *end != '\0' || v <= 0)
      throw adq::io::ParseError("ADQ_ORACLE_DET_BOUND must be a positive integer");
    opt.det_bound = v;
  }
  return opt;
}

void emit(const Json& report, const std::string& summary) {
  std::cout << report.dump(2) << "\n";
  std::cerr << summary << "\n";
}

int cmd_snf(const std::string& path) {
  adq::Mat2 a = adq::io::parse_matrix_file(path);
  adq::SmithDecomposition d = adq::snf(a);
  if (d.P * a * d.Q != d.diag_matrix())
    throw adq::CheckError("emitted SNF certificate fails re-verification");
  emit(Json{{"ring", adq::io::ring_json(a.domain())}, {"snf", adq::io::snf_json(d)}},
       "SNF diagonal (" + d.alpha1.str() + ", " + d.alpha2.str() + ")");
  return kExitTrue;
}

int cmd_leftgcd(const std::string& pa, const std::string& pb) {
  adq::Mat2 a = adq::io::parse_matrix_file(pa), b = adq::io::parse_matrix_file(pb);
  adq::DiagonalPair d = adq::leftgcd_snf(adq::snf(a), adq::snf(b));
  Json report{{"ring", adq::io::ring_json(a.domain())},
              {"diag", Json::array({adq::io::element_json(d.d1), adq::io::element_json(d.d2)})}};
  if (a.domain().kind == adq::DomainKind::Integers) {
    adq::LeftGcdResult full = adq::oracle::left_gcd_full(a, b);
    if (full.gcd_matrix * full.cofactorA != a || full.gcd_matrix * full.cofactorB != b)
      throw adq::CheckError("emitted left gcd certificate fails re-verification");
    if (full.d1 != d.d1 || full.d2 != d.d2)
      throw adq::CheckError("structural and Hermite left gcd diagonals disagree");
    report["gcd_matrix"] = adq::io::matrix_json(full.gcd_matrix);
    report["cofactorA"] = adq::io::matrix_json(full.cofactorA);
    report["cofactorB"] = adq::io::matrix_json(full.cofactorB);
  }
  emit(report, "left gcd SNF diagonal (" + d.d1.str() + ", " + d.d2.str() + ")");
  return kExitTrue;
}

int cmd_coprime(const std::string& pa, const std::string& pb) {
  adq::Mat2 a = adq::io::parse_matrix_file(pa), b = adq::io::parse_matrix_file(pb);
  bool c = adq::left_coprime(adq::snf(a), adq::snf(b));
  emit(Json{{"left_coprime", c}}, c ? "left coprime" : "not left coprime");
  return c ? kExitTrue : kExitFalse;
}

int cmd_divides(const std::string& pb, const std::string& pa) {
  adq::Mat2 b = adq::io::parse_matrix_file(pb), a = adq::io::parse_matrix_file(pa);
  auto q = adq::left_divides(b, a);
  if (!q) {
    emit(Json{{"divides", false}}, "B does not left-divide A");
    return kExitFalse;
  }
  if (b * *q != a) throw adq::CheckError("emitted quotient fails re-verification");
  emit(Json{{"divides", true}, {"quotient", adq::io::matrix_json(*q)}}, "B left-divides A");
  return kExitTrue;
}

int cmd_spectrum(const std::string& path) {
  adq::Mat2 a = adq::io::parse_matrix_file(path);
  adq::SmithDecomposition d = adq::snf(a);
  adq::Spectrum s = adq::spectrum(d.alpha2);
  Json primes = Json::array();
  for (const auto& q : s.primes) primes.push_back(adq::io::element_json(q));
  emit(Json{{"ring", adq::io::ring_json(a.domain())},
            {"diag", Json::array(
                         {adq::io::element_json(d.alpha1), adq::io::element_json(d.alpha2)})},
            {"spectrum", primes}},
       "spectrum " + s.str());
  return kExitTrue;
}

int cmd_adequate_part(const std::string& pb, const std::string& pa) {
  adq::Mat2 b = adq::io::parse_matrix_file(pb), a = adq::io::parse_matrix_file(pa);
  adq::AdequateMatrixSplit split = adq::adequate_part(b, a);
  if (split.S * split.T != b)
    throw adq::CheckError("emitted adequate split fails re-verification");
  emit(Json{{"ring", adq::io::ring_json(b.domain())},
            {"S", adq::io::matrix_json(split.S)},
            {"T", adq::io::matrix_json(split.T)},
            {"sigma", Json::array({adq::io::element_json(split.partition.sigma1),
                                   adq::io::element_json(split.partition.sigma2)})},
            {"trivial_flag", split.trivial_flag}},
       "adequate part with SNF diagonal (" + split.partition.sigma1.str() + ", " +
           split.partition.sigma2.str() + ")" +
           (split.trivial_flag ? " [trivial: pair is left coprime]" : ""));
  return kExitTrue;
}

Json witness_json(const adq::Theorem2Witness& w) {
  Json j{{"holds", w.ok}, {"trivial", w.trivial}, {"detail", w.detail}};
  if (w.q_product) j["q_product"] = adq::io::element_json(*w.q_product);
  if (w.tested_entry) j["tested_entry"] = adq::io::element_json(*w.tested_entry);
  return j;
}

int cmd_theorem2(const std::string& pa, const std::string& ps) {
  adq::Mat2 a = adq::io::parse_matrix_file(pa), s = adq::io::parse_matrix_file(ps);
  adq::Theorem2Witness w = adq::theorem2_check(a, s);
  emit(witness_json(w), w.detail);
  return w.ok ? kExitTrue : kExitFalse;
}

int cmd_lemma3(const std::string& pa, const std::string& pb, const std::string& ps) {
  adq::Mat2 a = adq::io::parse_matrix_file(pa), b = adq::io::parse_matrix_file(pb),
            s = adq::io::parse_matrix_file(ps);
  adq::Theorem2Witness w = adq::lemma3_check(a, b, s);
  emit(witness_json(w), w.detail);
  return w.ok ? kExitTrue : kExitFalse;
}

int cmd_oracle_divisors(const std::string& pb, bool include_units) {
  adq::Mat2 b = adq::io::parse_matrix_file(pb);
  auto divisors = adq::oracle::enumerate_left_divisors(b, include_units,
                                                       oracle_options_from_env());
  Json list = Json::array();
  for (const auto& d : divisors) list.push_back(adq::io::matrix_json(d.to_mat2()));
  emit(Json{{"count", divisors.size()}, {"divisors", list}},
       std::to_string(divisors.size()) + " left divisors (up to right strong associates)");
  return kExitTrue;
}

int cmd_oracle_check(const std::string& pb, const std::string& ps, const std::string& pt,
                     const std::string& pa, bool permissive) {
  adq::Mat2 b = adq::io::parse_matrix_file(pb), s = adq::io::parse_matrix_file(ps),
            t = adq::io::parse_matrix_file(pt), a = adq::io::parse_matrix_file(pa);
  adq::oracle::Options opt = oracle_options_from_env();
  opt.permissive_clause_ii = permissive;
  adq::oracle::DefinitionCheck c = adq::oracle::definition_check(b, s, t, a, opt);
  bool both = c.clause_i && c.clause_ii;
  emit(Json{{"clause_i", c.clause_i}, {"clause_ii", c.clause_ii}},
       std::string("clause (i): ") + (c.clause_i ? "holds" : "fails") + ", clause (ii): " +
           (c.clause_ii ? "holds" : "fails"));
  return both ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact divisor theory for nonsingular 2x2 matrices over a PID"};
  app.require_subcommand(1);

  std::string f1, f2, f3, f4;
  bool include_units = false, permissive = false;

  auto* c_snf = app.add_subcommand("snf", "Smith normal form with transform certificate");
  c_snf->add_option("matrix", f1)->required();

  auto* c_gcd = app.add_subcommand("leftgcd", "SNF diagonal of the left GCD (A, B)_l");
  c_gcd->add_option("A", f1)->required();
  c_gcd->add_option("B", f2)->required();

  auto* c_cop = app.add_subcommand("coprime", "Is (A, B)_l = I?");
  c_cop->add_option("A", f1)->required();
  c_cop->add_option("B", f2)->required();

  auto* c_div = app.add_subcommand("divides", "Does B left-divide A?");
  c_div->add_option("B", f1)->required();
  c_div->add_option("A", f2)->required();

  auto* c_spec = app.add_subcommand("spectrum", "Spectrum of a matrix");
  c_spec->add_option("matrix", f1)->required();

  auto* c_adq = app.add_subcommand("adequate-part", "Adequate part of B with respect to A");
  c_adq->add_option("B", f1)->required();
  c_adq->add_option("A", f2)->required();

  auto* c_t2 = app.add_subcommand("theorem2", "Structural adequacy criterion for (A, S)");
  c_t2->add_option("A", f1)->required();
  c_t2->add_option("S", f2)->required();

  auto* c_l3 = app.add_subcommand("lemma3", "Refined criterion for a left divisor S of B");
  c_l3->add_option("A", f1)->required();
  c_l3->add_option("B", f2)->required();
  c_l3->add_option("S", f3)->required();

  auto* c_od = app.add_subcommand("oracle-divisors", "Enumerate all left divisors (integers)");
  c_od->add_option("B", f1)->required();
  c_od->add_flag("--include-units", include_units);

  auto* c_oc = app.add_subcommand("oracle-check", "Adequacy definition clauses for B = S*T");
  c_oc->add_option("B", f1)->required();
  c_oc->add_option("S", f2)->required();
  c_oc->add_option("T", f3)->required();
  c_oc->add_option("A", f4)->required();
  c_oc->add_flag("--permissive-clause-ii", permissive);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_snf->parsed()) return cmd_snf(f1);
    if (c_gcd->parsed()) return cmd_leftgcd(f1, f2);
    if (c_cop->parsed()) return cmd_coprime(f1, f2);
    if (c_div->parsed()) return cmd_divides(f1, f2);
    if (c_spec->parsed()) return cmd_spectrum(f1);
    if (c_adq->parsed()) return cmd_adequate_part(f1, f2);
    if (c_t2->parsed()) return cmd_theorem2(f1, f2);
    if (c_l3->parsed()) return cmd_lemma3(f1, f2, f3);
    if (c_od->parsed()) return cmd_oracle_divisors(f1, include_units);
    if (c_oc->parsed()) return cmd_oracle_check(f1, f2, f3, f4, permissive);
  } catch (const adq::CheckError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const adq::io::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const adq::RingError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
