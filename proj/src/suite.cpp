#include "catswarm/suite.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "catswarm/text.hpp"

namespace catswarm {
namespace {

using std::numbers::pi;

double sq(double v) { return v * v; }

// F1 Sphere
double sphere(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

// F2 Schwefel 2.22: sum|x| + prod|x|
double schwefel_222(std::span<const double> x) {
    double s = 0.0, p = 1.0;
    for (double v : x) {
        s += std::fabs(v);
        p *= std::fabs(v);
    }
    return s + p;
}

// F3 Schwefel 1.2: sum of squared prefix sums
double schwefel_12(std::span<const double> x) {
    double s = 0.0, prefix = 0.0;
    for (double v : x) {
        prefix += v;
        s += prefix * prefix;
    }
    return s;
}

// F4 Schwefel 2.21: max |x_i|
double schwefel_221(std::span<const double> x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::fabs(v));
    return m;
}

// F5 Rosenbrock
double rosenbrock(std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        s += 100.0 * sq(x[i + 1] - x[i] * x[i]) + sq(x[i] - 1.0);
    return s;
}

// F6 Step
double step(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += sq(std::floor(v + 0.5));
    return s;
}

// F7 Quartic (noise added separately)
double quartic(std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double v2 = x[i] * x[i];
        s += static_cast<double>(i + 1) * v2 * v2;
    }
    return s;
}

// F8 Schwefel
double schwefel(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s -= v * std::sin(std::sqrt(std::fabs(v)));
    return s;
}

// F9 Rastrigin
double rastrigin(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v - 10.0 * std::cos(2.0 * pi * v) + 10.0;
    return s;
}

// F10 Ackley
double ackley(std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    double ss = 0.0, sc = 0.0;
    for (double v : x) {
        ss += v * v;
        sc += std::cos(2.0 * pi * v);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(ss / n)) - std::exp(sc / n) + 20.0 + std::numbers::e;
}

// F11 Griewank
double griewank(std::span<const double> x) {
    double s = 0.0, p = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += x[i] * x[i];
        p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return s / 4000.0 - p + 1.0;
}

double penalty_u(double x, double a, double k, double m) {
    if (x > a) return k * std::pow(x - a, m);
    if (x < -a) return k * std::pow(-x - a, m);
    return 0.0;
}

// F12 Penalized 1 (y-space sine landscape + boundary penalty)
double penalized1(std::span<const double> x) {
    const std::size_t n = x.size();
    auto y = [&](std::size_t i) { return 1.0 + (x[i] + 1.0) / 4.0; };
    double s = 10.0 * sq(std::sin(pi * y(0)));
    for (std::size_t i = 0; i + 1 < n; ++i)
        s += sq(y(i) - 1.0) * (1.0 + 10.0 * sq(std::sin(pi * y(i + 1))));
    s += sq(y(n - 1) - 1.0);
    double u = 0.0;
    for (double v : x) u += penalty_u(v, 10.0, 100.0, 4.0);
    return pi / static_cast<double>(n) * s + u;
}

// F13 Penalized 2
double penalized2(std::span<const double> x) {
    const std::size_t n = x.size();
    double s = sq(std::sin(3.0 * pi * x[0]));
    for (std::size_t i = 0; i + 1 < n; ++i)
        s += sq(x[i] - 1.0) * (1.0 + sq(std::sin(3.0 * pi * x[i + 1])));
    s += sq(x[n - 1] - 1.0) * (1.0 + sq(std::sin(2.0 * pi * x[n - 1])));
    double u = 0.0;
    for (double v : x) u += penalty_u(v, 5.0, 100.0, 4.0);
    return 0.1 * s + u;
}

// F14 Shekel's Foxholes
double foxholes(std::span<const double> x) {
    static const std::array<double, 5> base{-32.0, -16.0, 0.0, 16.0, 32.0};
    double s = 0.0;
    for (int j = 0; j < 25; ++j) {
        const double a0 = base[j % 5];
        const double a1 = base[j / 5];
        const double d0 = x[0] - a0;
        const double d1 = x[1] - a1;
        const double p0 = d0 * d0 * d0;
        const double p1 = d1 * d1 * d1;
        s += 1.0 / (static_cast<double>(j + 1) + p0 * p0 + p1 * p1);
    }
    return 1.0 / (1.0 / 500.0 + s);
}

// F15 Kowalik
double kowalik(std::span<const double> x) {
    static const std::array<double, 11> a{0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627,
                                          0.0456, 0.0342, 0.0323, 0.0235, 0.0246};
    static const std::array<double, 11> binv{0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0};
    double s = 0.0;
    for (int i = 0; i < 11; ++i) {
        const double b = 1.0 / binv[i];
        const double num = x[0] * (b * b + b * x[1]);
        const double den = b * b + b * x[2] + x[3];
        s += sq(a[i] - num / den);
    }
    return s;
}

// F16 Six-Hump Camel
double camel(std::span<const double> x) {
    const double x1 = x[0], x2 = x[1];
    return 4.0 * sq(x1) - 2.1 * std::pow(x1, 4) + std::pow(x1, 6) / 3.0 + x1 * x2 -
           4.0 * sq(x2) + 4.0 * std::pow(x2, 4);
}

// F17 Branin
double branin(std::span<const double> x) {
    const double x1 = x[0], x2 = x[1];
    return sq(x2 - 5.1 / (4.0 * pi * pi) * x1 * x1 + 5.0 / pi * x1 - 6.0) +
           10.0 * (1.0 - 1.0 / (8.0 * pi)) * std::cos(x1) + 10.0;
}

// F18 Goldstein-Price
double goldstein_price(std::span<const double> x) {
    const double x1 = x[0], x2 = x[1];
    const double a = 1.0 + sq(x1 + x2 + 1.0) * (19.0 - 14.0 * x1 + 3.0 * x1 * x1 -
                                                14.0 * x2 + 6.0 * x1 * x2 + 3.0 * x2 * x2);
    const double b = 30.0 + sq(2.0 * x1 - 3.0 * x2) * (18.0 - 32.0 * x1 + 12.0 * x1 * x1 +
                                                       48.0 * x2 - 36.0 * x1 * x2 + 27.0 * x2 * x2);
    return a * b;
}

constexpr std::array<double, 4> kHartmannC{1.0, 1.2, 3.0, 3.2};

// F19 Hartmann 3-D
double hartmann3(std::span<const double> x) {
    static const std::array<std::array<double, 3>, 4> A{{{3.0, 10.0, 30.0},
                                                         {0.1, 10.0, 35.0},
                                                         {3.0, 10.0, 30.0},
                                                         {0.1, 10.0, 35.0}}};
    static const std::array<std::array<double, 3>, 4> P{{{0.3689, 0.1170, 0.2673},
                                                         {0.4699, 0.4387, 0.7470},
                                                         {0.1091, 0.8732, 0.5547},
                                                         {0.0381, 0.5743, 0.8828}}};
    double s = 0.0;
    for (int i = 0; i < 4; ++i) {
        double e = 0.0;
        for (int j = 0; j < 3; ++j) e += A[i][j] * sq(x[j] - P[i][j]);
        s -= kHartmannC[i] * std::exp(-e);
    }
    return s;
}

// F20 Hartmann 6-D
double hartmann6(std::span<const double> x) {
    static const std::array<std::array<double, 6>, 4> A{{{10.0, 3.0, 17.0, 3.5, 1.7, 8.0},
                                                         {0.05, 10.0, 17.0, 0.1, 8.0, 14.0},
                                                         {3.0, 3.5, 1.7, 10.0, 17.0, 8.0},
                                                         {17.0, 8.0, 0.05, 10.0, 0.1, 14.0}}};
    static const std::array<std::array<double, 6>, 4> P{
        {{0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886},
         {0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991},
         {0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650},
         {0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381}}};
    double s = 0.0;
    for (int i = 0; i < 4; ++i) {
        double e = 0.0;
        for (int j = 0; j < 6; ++j) e += A[i][j] * sq(x[j] - P[i][j]);
        s -= kHartmannC[i] * std::exp(-e);
    }
    return s;
}

// F21-F23 Shekel family
constexpr std::array<std::array<double, 4>, 10> kShekelA{{{4.0, 4.0, 4.0, 4.0},
                                                          {1.0, 1.0, 1.0, 1.0},
                                                          {8.0, 8.0, 8.0, 8.0},
                                                          {6.0, 6.0, 6.0, 6.0},
                                                          {3.0, 7.0, 3.0, 7.0},
                                                          {2.0, 9.0, 2.0, 9.0},
                                                          {5.0, 5.0, 3.0, 3.0},
                                                          {8.0, 1.0, 8.0, 1.0},
                                                          {6.0, 2.0, 6.0, 2.0},
                                                          {7.0, 3.6, 7.0, 3.6}}};
constexpr std::array<double, 10> kShekelC{0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5};

template <int M>
double shekel(std::span<const double> x) {
    double s = 0.0;
    for (int i = 0; i < M; ++i) {
        double d = kShekelC[i];
        for (int j = 0; j < 4; ++j) d += sq(x[j] - kShekelA[i][j]);
        s -= 1.0 / d;
    }
    return s;
}

SuiteEntry scalable_entry(std::string id, std::string name, Family family, double lo, double hi,
                          std::function<double(std::span<const double>)> fn) {
    SuiteEntry e;
    e.id = std::move(id);
    e.name = std::move(name);
    e.family = family;
    e.default_dim = 30;
    e.scalable = true;
    e.lower = {lo};
    e.upper = {hi};
    e.base = std::move(fn);
    return e;
}

SuiteEntry fixed_entry(std::string id, std::string name, int dim, std::vector<double> lo,
                       std::vector<double> hi, double f_min, double best_known,
                       std::vector<double> argmin,
                       std::function<double(std::span<const double>)> fn) {
    SuiteEntry e;
    e.id = std::move(id);
    e.name = std::move(name);
    e.family = Family::FixedDimMultimodal;
    e.default_dim = dim;
    e.scalable = false;
    e.lower = std::move(lo);
    e.upper = std::move(hi);
    e.f_min = f_min;
    e.best_known = best_known;
    e.argmin = std::move(argmin);
    e.base = std::move(fn);
    return e;
}

std::vector<SuiteEntry> build_suite() {
    std::vector<SuiteEntry> s;
    s.push_back(scalable_entry("F1", "Sphere", Family::Unimodal, -100.0, 100.0, sphere));
    s.push_back(scalable_entry("F2", "Schwefel 2.22", Family::Unimodal, -10.0, 10.0, schwefel_222));
    s.push_back(scalable_entry("F3", "Schwefel 1.2", Family::Unimodal, -100.0, 100.0, schwefel_12));
    s.push_back(scalable_entry("F4", "Schwefel 2.21", Family::Unimodal, -100.0, 100.0, schwefel_221));
    s.push_back(scalable_entry("F5", "Rosenbrock", Family::Unimodal, -30.0, 30.0, rosenbrock));
    s.push_back(scalable_entry("F6", "Step", Family::Unimodal, -100.0, 100.0, step));
    s.push_back(scalable_entry("F7", "Quartic with noise", Family::Unimodal, -1.28, 1.28, quartic));
    s.back().noisy = true;
    s.push_back(scalable_entry("F8", "Schwefel", Family::Multimodal, -500.0, 500.0, schwefel));
    s.back().f_min_scales_with_dim = true;
    s.back().f_min = -418.9829;  // per dimension; see f_min_at()
    s.push_back(scalable_entry("F9", "Rastrigin", Family::Multimodal, -5.12, 5.12, rastrigin));
    s.push_back(scalable_entry("F10", "Ackley", Family::Multimodal, -32.0, 32.0, ackley));
    s.push_back(scalable_entry("F11", "Griewank", Family::Multimodal, -600.0, 600.0, griewank));
    s.push_back(scalable_entry("F12", "Penalized 1", Family::Multimodal, -50.0, 50.0, penalized1));
    s.push_back(scalable_entry("F13", "Penalized 2", Family::Multimodal, -50.0, 50.0, penalized2));

    // Scalable entries minimize at the origin except F5 (ones), F8
    // (420.9687 * ones) and F12 (-ones).
    for (auto& e : s) {
        if (e.id == "F5")
            e.argmin = std::vector<double>(static_cast<std::size_t>(e.default_dim), 1.0);
        else if (e.id == "F8")
            e.argmin = std::vector<double>(static_cast<std::size_t>(e.default_dim), 420.9687);
        else if (e.id == "F12")
            e.argmin = std::vector<double>(static_cast<std::size_t>(e.default_dim), -1.0);
        else
            e.argmin = std::vector<double>(static_cast<std::size_t>(e.default_dim), 0.0);
        e.best_known = e.id == "F8" ? -418.9829 * e.default_dim : 0.0;
    }

    s.push_back(fixed_entry("F14", "Shekel's Foxholes", 2, {-65.536, -65.536}, {65.536, 65.536},
                            1.0, 0.9980038388186492, {-32.0, -32.0}, foxholes));
    s.push_back(fixed_entry("F15", "Kowalik", 4, std::vector<double>(4, -5.0), std::vector<double>(4, 5.0),
                            0.00030, 0.00030748598865587275,
                            {0.192833, 0.190836, 0.123117, 0.135766}, kowalik));
    s.push_back(fixed_entry("F16", "Six-Hump Camel", 2, {-5.0, -5.0}, {5.0, 5.0},
                            -1.0316, -1.031628453489877, {0.08984201, -0.7126564}, camel));
    s.push_back(fixed_entry("F17", "Branin", 2, {-5.0, 0.0}, {10.0, 15.0},
                            0.398, 0.39788735772973816, {pi, 2.275}, branin));
    s.push_back(fixed_entry("F18", "Goldstein-Price", 2, {-2.0, -2.0}, {2.0, 2.0},
                            3.0, 3.0, {0.0, -1.0}, goldstein_price));
    s.push_back(fixed_entry("F19", "Hartmann 3-D", 3, std::vector<double>(3, 0.0), std::vector<double>(3, 1.0),
                            -3.86, -3.8627797869493365,
                            {0.114614, 0.555649, 0.852547}, hartmann3));
    s.push_back(fixed_entry("F20", "Hartmann 6-D", 6, std::vector<double>(6, 0.0), std::vector<double>(6, 1.0),
                            -3.32, -3.322368011391339,
                            {0.20169, 0.150011, 0.476874, 0.275332, 0.311652, 0.6573}, hartmann6));
    s.push_back(fixed_entry("F21", "Shekel m=5", 4, std::vector<double>(4, 0.0), std::vector<double>(4, 10.0),
                            -10.1532, -10.153195850979039, std::vector<double>(4, 4.0), shekel<5>));
    s.push_back(fixed_entry("F22", "Shekel m=7", 4, std::vector<double>(4, 0.0), std::vector<double>(4, 10.0),
                            -10.4028, -10.402818836930305, std::vector<double>(4, 4.0), shekel<7>));
    s.push_back(fixed_entry("F23", "Shekel m=10", 4, std::vector<double>(4, 0.0), std::vector<double>(4, 10.0),
                            -10.5363, -10.536283726219605, std::vector<double>(4, 4.0), shekel<10>));
    return s;
}

}  // namespace

int SuiteEntry::resolve_dim(int requested) const {
    if (requested <= 0) return default_dim;
    if (!scalable && requested != default_dim)
        throw std::invalid_argument(id + " has fixed dimension " + std::to_string(default_dim));
    return requested;
}

double SuiteEntry::f_min_at(int dim) const {
    return f_min_scales_with_dim ? f_min * static_cast<double>(dim) : f_min;
}

const std::vector<SuiteEntry>& suite() {
    static const std::vector<SuiteEntry> entries = build_suite();
    return entries;
}

const SuiteEntry* find(const std::string& id) {
    for (const auto& e : suite())
        if (e.id == id) return &e;
    return nullptr;
}

const SuiteEntry& lookup(const std::string& id) {
    const SuiteEntry* e = find(id);
    if (!e) throw std::out_of_range("unknown function '" + id + "' (expected F1..F23)");
    return *e;
}

double evaluate_noiseless(const SuiteEntry& entry, std::span<const double> x) {
    if (entry.scalable) {
        if (x.empty()) throw std::invalid_argument(entry.id + ": empty position");
    } else if (static_cast<int>(x.size()) != entry.default_dim) {
        throw std::invalid_argument(entry.id + ": expected dimension " +
                                    std::to_string(entry.default_dim) + ", got " +
                                    std::to_string(x.size()));
    }
    return entry.base(x);
}

double evaluate(const SuiteEntry& entry, std::span<const double> x, Rng& rng) {
    const double v = evaluate_noiseless(entry, x);
    return entry.noisy ? v + rng.uniform01() : v;
}

Objective make_objective(const SuiteEntry& entry, int dim) {
    const int d = entry.resolve_dim(dim);
    Objective obj;
    obj.name = entry.id;
    obj.dim = d;
    if (entry.scalable) {
        obj.lower.assign(static_cast<std::size_t>(d), entry.lower[0]);
        obj.upper.assign(static_cast<std::size_t>(d), entry.upper[0]);
    } else {
        obj.lower = entry.lower;
        obj.upper = entry.upper;
    }
    obj.f_min = entry.f_min_at(d);
    const SuiteEntry* e = &entry;
    obj.evaluate = [e, d](std::span<const double> x, Rng& rng) {
        if (static_cast<int>(x.size()) != d)
            throw std::invalid_argument(e->id + ": expected dimension " + std::to_string(d) +
                                        ", got " + std::to_string(x.size()));
        return evaluate(*e, x, rng);
    };
    return obj;
}

Objective make_objective(const std::string& id, int dim) {
    return make_objective(lookup(id), dim);
}

std::string registry_csv() {
    std::ostringstream out;
    out << "id,family,dim,lower,upper,f_min\n";
    for (const auto& e : suite()) {
        const char* family = e.family == Family::Unimodal ? "unimodal"
                             : e.family == Family::Multimodal ? "multimodal"
                                                              : "fixed-dim multimodal";
        out << e.id << ',' << family << ',' << e.default_dim << ',';
        out << text::join_compact(e.lower) << ',' << text::join_compact(e.upper) << ',';
        out << text::format_double(e.f_min_at(e.default_dim)) << '\n';
    }
    return out.str();
}

}  // namespace catswarm
