// Acceptance gate: one PASS/FAIL line per criterion. Every equality is exact (tolerance zero);
// the only numeric thresholds are the wall-clock budgets below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <cardyfrob/cardyfrob.hpp>
#include <cardyfrob/io.hpp>

using namespace cardyfrob;

namespace {

constexpr double kA5BudgetSeconds = 60.0;
constexpr double kAxiomSuiteBudgetSeconds = 300.0;
constexpr std::size_t kSpecsPerPair = 30;
constexpr std::uint32_t kSeed = 20240917;

// Expected values as stated for the A5 example.
constexpr std::size_t kA5ExpectedX = 6;
const std::vector<std::size_t> kA5ExpectedOrders{2, 4, 10, 10, 12, 60};
constexpr std::size_t kA5ExpectedDimA = 2;
constexpr std::size_t kA5ExpectedDimB = 26;
constexpr std::size_t kA5ExpectedCentre = 2;
constexpr std::size_t kHeckeS3ExpectedDim = 3;

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Entry {
  std::string name;
  std::string group_file;
  SubgroupPair pair;
  CardyFrobeniusAlgebra h;
  std::vector<SurfaceSpec> corpus;
};

int failures = 0;

void verdict(int criterion, bool ok, const std::string& title, const std::string& detail) {
  std::printf("%s criterion %d: %s -- %s\n", ok ? "PASS" : "FAIL", criterion, title.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

SubgroupPair load(const std::string& file) {
  return io::load_pair(io::parse_group_document(io::read_json_file(std::string(CARDYFROB_DATA_DIR) + "/groups/" + file)));
}

std::vector<SurfaceSpec> random_corpus(const FieldCatalog& c, std::mt19937& rng) {
  std::vector<SurfaceSpec> out;
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  while (out.size() < kSpecsPerPair) {
    SurfaceSpec s;
    s.orientable = pick(2) == 1;
    s.twice_genus = s.orientable ? 2 * pick(3) : 1 + pick(4);
    const std::size_t m = pick(3);
    for (std::size_t i = 0; i < m; ++i) s.interior.push_back(c.interior[pick(c.interior.size())].label);
    const std::size_t contours = pick(3);
    for (std::size_t k = 0; k < contours; ++k) {
      std::vector<std::string> contour;
      const std::size_t len = 1 + pick(2);
      for (std::size_t i = 0; i < len; ++i) contour.push_back(c.boundary[pick(c.boundary.size())].label);
      s.boundary.push_back(std::move(contour));
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string describe(const SurfaceSpec& s) { return io::surface_to_json(s).dump(); }

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "}";
  return os.str();
}

void criterion_1() {
  const auto t = Clock::now();
  const auto pair = load("a5_z2.json");
  const auto h = build_cardy(pair.nset);
  std::vector<std::size_t> orders;
  for (const auto& s : pair.overgroups) orders.push_back(s.order());
  const std::size_t centre = center_dimension(h.b);
  const std::size_t phi_rank = rank(h.phi);
  bool phi_central = true;
  for (std::size_t i = 0; i < h.a.dim(); ++i) phi_central = phi_central && is_central(h.b, h.apply_phi(h.a.basis(i)));
  const bool semisimple = is_semisimple(h.b);
  const double elapsed = seconds_since(t);

  std::vector<std::string> failed;
  if (pair.overgroups.size() != kA5ExpectedX) failed.push_back("|X|");
  if (orders != kA5ExpectedOrders) failed.push_back("X orders");
  if (h.a.dim() != kA5ExpectedDimA) failed.push_back("dim A");
  if (h.b.dim() != kA5ExpectedDimB) failed.push_back("dim B");
  if (centre != kA5ExpectedCentre) failed.push_back("dim Z(B)");
  if (phi_rank != h.a.dim()) failed.push_back("phi injective");
  if (!phi_central || phi_rank != centre) failed.push_back("phi onto Z(B)");
  if (!semisimple) failed.push_back("semisimple");
  if (elapsed >= kA5BudgetSeconds) failed.push_back("runtime");

  std::ostringstream d;
  d << "|X|=" << pair.overgroups.size() << " (expected " << kA5ExpectedX << "), orders=" << join(orders)
    << " (expected " << join(kA5ExpectedOrders) << "), dim A=" << h.a.dim() << ", dim B=" << h.b.dim() << " (expected "
    << kA5ExpectedDimB << "), dim Z(B)=" << centre << ", rank phi=" << phi_rank << ", phi central=" << phi_central
    << ", semisimple=" << semisimple << ", " << elapsed << "s";
  if (!failed.empty()) d << "; failed: " << join(failed);
  verdict(1, failed.empty(), "A5 with K=<(01)(23)>", d.str());
}

void criterion_2(const std::vector<Entry>& suite, double build_seconds) {
  const auto t = Clock::now();
  std::vector<std::string> failed;
  std::size_t checks = 0;
  for (const auto& e : suite) {
    const auto r = verify_all(e.h);
    checks += r.results().size();
    for (const auto& x : r.results())
      if (!x.passed) failed.push_back(e.name + ":" + x.axiom + " (" + x.witness + ")");
  }
  const double elapsed = seconds_since(t) + build_seconds;
  std::ostringstream d;
  d << checks << " checks over " << suite.size() << " pairs, " << elapsed << "s";
  if (!failed.empty()) d << "; failed: " << join(failed);
  if (elapsed >= kAxiomSuiteBudgetSeconds) d << "; over the " << kAxiomSuiteBudgetSeconds << "s budget";
  verdict(2, failed.empty() && elapsed < kAxiomSuiteBudgetSeconds, "axiom suite", d.str());
}

void criterion_3(const std::vector<Entry>& suite) {
  std::size_t closed_count = 0, bordered_count = 0;
  std::vector<std::string> failed;
  for (const auto& e : suite)
    for (const auto& s : e.corpus) {
      const auto v = evaluate(e.h, s).value;
      const auto o = oracle_for(e.h, s).value;
      (s.boundary.empty() ? closed_count : bordered_count)++;
      if (v != o) failed.push_back(e.name + " " + describe(s) + ": " + to_string(v) + " vs " + to_string(o));
    }
  std::ostringstream d;
  d << closed_count << " closed and " << bordered_count << " bordered specs";
  if (!failed.empty()) d << "; mismatches: " << join(failed);
  verdict(3, failed.empty(), "oracle equivalence", d.str());
}

void criterion_4(const std::vector<Entry>& suite) {
  std::size_t handle = 0, crosscap = 0, segment = 0;
  std::vector<std::string> failed;
  auto record = [&](const Entry& e, const SurfaceSpec& s, const IdentityCheck& c) {
    if (!c.holds()) failed.push_back(e.name + " " + c.name + " " + describe(s) + ": " + to_string(c.lhs) + " vs " + to_string(c.rhs));
  };
  for (const auto& e : suite)
    for (const auto& s : e.corpus) {
      if (s.orientable && s.twice_genus >= 2) {
        record(e, s, cut_check_handle(e.h, s));
        ++handle;
      }
      if (!s.orientable) {
        record(e, s, cut_check_crosscap(e.h, s));
        ++crosscap;
      }
      if (s.boundary.size() >= 2) {
        record(e, s, cut_check_boundary(e.h, s));
        ++segment;
      }
    }
  std::ostringstream d;
  d << handle << " handle, " << crosscap << " crosscap, " << segment << " segment cuts";
  if (!failed.empty()) d << "; failed: " << join(failed);
  verdict(4, failed.empty() && handle && crosscap && segment, "cut identities", d.str());
}

void criterion_5(const Entry& z2) {
  const auto& h = z2.h;
  const auto& b = h.b;
  auto spec = [](bool orientable, std::size_t twice, std::vector<std::vector<std::string>> boundary = {}) {
    SurfaceSpec s;
    s.orientable = orientable;
    s.twice_genus = twice;
    s.boundary = std::move(boundary);
    return s;
  };
  // b0 = (S0,S0), b1 = (S0,S1), b2 = (S1,S0), b3 = (S1,S1)
  struct Item {
    std::string what;
    Rational got;
    Rational want;
  };
  const auto d00 = h.apply_phi_dual(b.basis("b0"));
  std::vector<Item> items{
      {"sphere", evaluate(h, spec(true, 0)).value, Rational(1, 2)},
      {"torus", evaluate(h, spec(true, 2)).value, Rational(2)},
      {"projective plane", evaluate(h, spec(false, 1)).value, Rational(1)},
      {"Klein bottle", evaluate(h, spec(false, 2)).value, Rational(2)},
      {"disc [b01,b10]", evaluate(h, spec(true, 0, {{"b1", "b2"}})).value, Rational(1, 2)},
      {"Cardy (b00,b00)", h.a.bilinear(d00, d00), Rational(1)},
  };
  std::vector<std::string> failed;
  const bool matrix_units = b.dim() == 4 && b.multiply(b.basis("b1"), b.basis("b2")) == b.basis("b0") &&
                            b.multiply(b.basis("b2"), b.basis("b1")) == b.basis("b3") &&
                            b.multiply(b.basis("b1"), b.basis("b1")) == b.zero();
  if (!matrix_units) failed.push_back("B matrix units");
  std::ostringstream d;
  for (const auto& it : items) {
    d << it.what << "=" << to_string(it.got) << " ";
    if (it.got != it.want) failed.push_back(it.what + " expected " + to_string(it.want));
  }
  if (!failed.empty()) d << "; failed: " << join(failed);
  verdict(5, failed.empty(), "Z2 micro-example", d.str());
}

void criterion_6() {
  std::vector<std::string> failed;
  std::ostringstream d;
  const auto s3 = load("s3_trivial.json").g;
  const auto t3 = closure(s3, {*s3.index_of({1, 0, 2})});
  const auto r3 = hecke_check(s3, t3);
  d << "S3: dim B=" << r3.b.dim() << " (expected " << kHeckeS3ExpectedDim << "), double cosets=" << r3.double_cosets
    << ", convolution " << (r3.report.all_passed() ? "agrees" : "disagrees");
  if (r3.b.dim() != kHeckeS3ExpectedDim) failed.push_back("S3 dim B");
  if (!r3.report.all_passed()) failed.push_back("S3 convolution");

  const auto s4 = load("s4_trivial.json").g;
  const auto t4 = closure(s4, {*s4.index_of({1, 0, 2, 3})});
  const auto r4 = hecke_check(s4, t4);
  d << "; S4: dim B=" << r4.b.dim() << ", double cosets=" << r4.double_cosets << ", convolution "
    << (r4.report.all_passed() ? "agrees" : "disagrees");
  if (!r4.report.all_passed()) failed.push_back("S4 convolution");
  if (!failed.empty()) d << "; failed: " << join(failed);
  verdict(6, failed.empty(), "Hecke algebras", d.str());
}

void criterion_7(const std::vector<Entry>& suite) {
  std::size_t checks = 0;
  std::vector<std::string> failed;
  for (const auto& e : suite)
    for (const auto& s : e.corpus) {
      const auto v = evaluate(e.h, s).value;
      auto expect = [&](const std::string& what, const Rational& got) {
        ++checks;
        if (got != v) failed.push_back(e.name + " " + what + " " + describe(s));
      };
      expect("orientation reversal", evaluate(e.h, orientation_reversed(e.h.catalog, s)).value);
      for (std::size_t c = 0; c < s.boundary.size(); ++c)
        for (std::size_t k = 1; k < s.boundary[c].size(); ++k) expect("rotation", evaluate(e.h, rotate_contour(s, c, k)).value);
      if (s.boundary.size() == 2) {
        auto swapped = s;
        std::swap(swapped.boundary[0], swapped.boundary[1]);
        expect("contour order", evaluate(e.h, swapped).value);
      }
      auto with_unit = s;
      with_unit.interior.push_back(e.h.catalog.interior[0].label);
      expect("interior unit", evaluate(e.h, with_unit).value);
      for (std::size_t c = 0; c < s.boundary.size(); ++c) expect("boundary unit", evaluate_with_boundary_unit(e.h, s, c, 1));
    }
  std::ostringstream d;
  d << checks << " invariance checks";
  if (!failed.empty()) d << "; failed: " << join(failed);
  verdict(7, failed.empty(), "invariance properties", d.str());
}

void criterion_8(const std::vector<Entry>& suite) {
  std::vector<std::string> failed;
  std::ostringstream d;
  for (const auto& e : suite) {
    const auto burnside = burnside_pair_orbit_count(e.h.catalog.nset);
    d << e.name << ":" << e.h.b.dim() << " ";
    if (burnside != Rational(static_cast<long long>(e.h.b.dim())))
      failed.push_back(e.name + " Burnside " + to_string(burnside));
  }
  if (!failed.empty()) d << "; failed: " << join(failed);
  verdict(8, failed.empty(), "Burnside dimension identity", d.str());
}

} // namespace

int main() {
  criterion_1();

  const auto t = Clock::now();
  const std::vector<std::pair<std::string, std::string>> pairs{
      {"Z2/{e}", "z2_trivial.json"},         {"Z3/{e}", "z3_trivial.json"},
      {"S3/{e}", "s3_trivial.json"},         {"S3/<(01)>", "s3_transposition.json"},
      {"S4/{e}", "s4_trivial.json"},         {"S4/<(01)(23)>", "s4_double_transposition.json"},
      {"A5/<(01)(23)>", "a5_z2.json"}};
  std::vector<Entry> suite;
  std::mt19937 rng(kSeed);
  for (const auto& [name, file] : pairs) {
    Entry e{name, file, load(file), {}, {}};
    e.h = build_cardy(e.pair.nset);
    e.corpus = random_corpus(e.h.catalog, rng);
    suite.push_back(std::move(e));
  }
  const double build_seconds = seconds_since(t);

  criterion_2(suite, build_seconds);
  criterion_3(suite);
  criterion_4(suite);
  criterion_5(suite.front());
  criterion_6();
  criterion_7(suite);
  criterion_8(suite);

  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
