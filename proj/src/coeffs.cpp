#include "gramroot/coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gramroot/errors.hpp"

namespace gramroot {

namespace {

struct Frac {
    long long num;
    long long den;
};

// Tabulated Chebyshev series coefficients for sqrt on [n0, 1], one row per
// conditioning class (n0 >= 1e-1, 5e-2, 1e-2, 5e-3, 1e-3), orders 0..19.
constexpr Frac kChebSqrt[5][20] = {
    {{50720584, 36057897},  {58192354, 176379781}, {-4460738, 108096729}, {599673, 57061255},
     {-287819, 85384633},   {183411, 150871267},   {-58340, 123912171},   {51981, 271721903},
     {-7566, 94035965},     {2764, 79582277},      {-201, 13137223},      {1188, 173409911},
     {-409, 131560083},     {145, 101639721},      {-17, 25723455},       {55, 178196989},
     {-15, 103329721},      {3, 43668719},         {-1, 30591204},        {1, 63979016}},
    {{141760564, 104989387}, {35002745, 95238932}, {-5385084, 98048633},  {375119, 22232916},
     {-123075, 18770531},   {964144, 335715223},   {-99240, 73358167},    {61845, 92416364},
     {-49497, 144355439},   {43265, 239826181},    {-8116, 83759003},     {4645, 87782356},
     {-4539, 154958201},    {2159, 131648930},     {-567, 61162961},      {708, 133999337},
     {-225, 74184637},      {187, 106738132},      {-91, 89427045},       {77, 129639190}},
    {{94293998, 72892523},  {11654085, 28548136},  {-13024699, 174927782}, {1616566, 56730601},
     {-1147126, 82276417},  {761833, 98466580},    {-308484, 66539819},   {263708, 90144229},
     {-162889, 85022700},   {161374, 125071371},   {-37949, 42730513},    {43604, 70096297},
     {-29207, 66081562},    {51537, 162168061},    {-25435, 110193549},   {11535, 68213866},
     {-10239, 82034690},    {3604, 38866185},      {-6215, 89696092},     {2753, 52900755}},
    {{111282682, 86634283}, {19778972, 47632141},  {-10097893, 128419878}, {1613988, 51323195},
     {-1103585, 68372228},  {1156783, 122811139},  {-1072665, 180416284}, {182246, 46057955},
     {-335564, 122664125},  {102602, 52715219},    {-86227, 60890409},    {77118, 73520351},
     {-61735, 78300108},    {43125, 71884333},     {-93187, 202045214},   {27405, 76607114},
     {-26887, 96161515},    {1853, 8422610},       {-19053, 109416983},   {2101, 15164315}},
    {{67448647, 52859297},  {18465778, 43750239},  {-3199979, 38492102},  {3836927, 109928911},
     {-1863218, 98477081},  {1438469, 122838561},  {-1071366, 136237541}, {1846182, 330775465},
     {-1551939, 376426982}, {400555, 127615892},   {-362239, 148056512},  {272353, 140130127},
     {-353347, 225334648},  {98124, 76560973},     {-75049, 70863879},    {78769, 89167398},
     {-41954, 56475965},    {258049, 410152123},   {-33661, 62777131},    {177773, 386862333}}};

// Same layout for the reciprocal square root.
constexpr Frac kChebInvSqrt[5][20] = {
    {{374048017, 113951175}, {-88499941, 99875048}, {15797788, 45155977},  {-20535446, 134671187},
     {3198561, 45955201},   {-1821274, 55810317},   {1646349, 105728006},  {-656367, 87247730},
     {187127, 51011883},    {-257569, 142972536},   {337750, 379582213},   {-17881, 40498318},
     {23207, 105516984},    {-16946, 154174661},    {5735, 104114243},     {-1684, 60855691},
     {1403, 100712358},     {-640, 91088439},       {138, 38877931},       {-197, 109695708}},
    {{249779459, 67453088}, {-350792999, 280590374}, {132037463, 217146298}, {-17309909, 53231083},
     {24420789, 134319148}, {-11726340, 112404257}, {9883564, 162320651},  {-3377515, 93897642},
     {1014741, 47325860},   {-16780163, 1303748560}, {510107, 65658935},   {-491723, 104378654},
     {360646, 125772587},   {-240771, 137509316},   {128666, 120011707},   {-79363, 120608489},
     {30997, 76590848},     {-26019, 104339573},    {15878, 103168691},    {-17123, 180008350}},
    {{237825977, 50542861}, {-39264271, 17952244},  {195265677, 138817343}, {-103416965, 105120298},
     {12141478, 16961213},  {-81979913, 153769588}, {100102199, 248249039}, {-41303408, 133947555},
     {47672400, 200509969}, {-10291450, 55779169},  {11305153, 78552187},  {-9467215, 83975554},
     {3834427, 43265789},   {-7690733, 110058353},  {5948375, 107682632},  {-3503490, 80051251},
     {1048651, 30183225},   {-6557825, 237360333},  {19174519, 871395101}, {-999069, 56928095}},
    {{564146905, 109693414}, {-271445188, 103894561}, {203729517, 112913626}, {-84437949, 62627027},
     {49111051, 46961990},  {-15609456, 18825521},  {63222034, 94771407},  {-56599573, 104360532},
     {38412599, 86436742},  {-62114496, 169532831}, {75488883, 248678426}, {-2511703, 9946203},
     {16184137, 76778415},  {-21196048, 120119399}, {17846601, 120516115}, {-7550133, 60623138},
     {11163511, 106379007}, {-5209630, 58817269},   {7231330, 96584953},   {-11584499, 182801188}},
    {{630048624, 102215551}, {-343367843, 94808470}, {294957839, 105949003}, {-494742647, 216022718},
     {1224960907, 629659811}, {-206423487, 122566312}, {180757935, 122418742}, {-130317757, 99758659},
     {119757642, 102912463}, {-36868111, 35375072}, {65195223, 69543947},  {-95599410, 112964291},
     {184341026, 240571663}, {-55931467, 80408470}, {68082220, 107582399}, {-70019489, 121380714},
     {69973473, 132846113}, {-35406207, 73506184},  {53675438, 121692277}, {-34220975, 84624381}}};

// Truncation orders reaching a target matrix relative error; columns are
// delta = 1e-2..1e-6, -1 marks an untabulated cell.
constexpr int kChebOrderSqrt[5][5] = {{3, 5, 8, 11, 14},
                                      {4, 7, 11, 15, 19},
                                      {6, 13, 21, 31, 40},
                                      {8, 17, 29, 41, -1},
                                      {12, 30, -1, -1, -1}};
constexpr int kChebOrderInvSqrt[5][5] = {{5, 9, 12, 15, 19},
                                         {8, 13, 17, 22, 27},
                                         {18, 28, 39, -1, -1},
                                         {25, 40, -1, -1, -1},
                                         {-1, -1, -1, -1, -1}};

constexpr double kClassBounds[5] = {1e-1, 5e-2, 1e-2, 5e-3, 1e-3};
constexpr const char* kClassNames[5] = {"1e-1", "5e-2", "1e-2", "5e-3", "1e-3"};

int class_index(N0Class c) { return static_cast<int>(c); }

} // namespace

double n0_class_bound(N0Class c) { return kClassBounds[class_index(c)]; }

const char* n0_class_name(N0Class c) { return kClassNames[class_index(c)]; }

std::optional<N0Class> parse_n0_class(const std::string& s) {
    for (int i = 0; i < 5; ++i)
        if (s == kClassNames[i]) return static_cast<N0Class>(i);
    return std::nullopt;
}

std::optional<N0Class> n0_class_for(double n0) {
    for (int i = 0; i < 5; ++i)
        if (n0 >= kClassBounds[i]) return static_cast<N0Class>(i);
    return std::nullopt;
}

const char* kind_name(Kind k) { return k == Kind::Sqrt ? "sqrt" : "invsqrt"; }

const char* method_name(Method m) {
    switch (m) {
        case Method::TSE: return "tse";
        case Method::CPE1: return "cpe1";
        case Method::CPE2: return "cpe2";
        case Method::PAE: return "pae";
    }
    return "unknown";
}

std::optional<Kind> parse_kind(const std::string& s) {
    if (s == "sqrt") return Kind::Sqrt;
    if (s == "invsqrt") return Kind::InvSqrt;
    return std::nullopt;
}

std::optional<Method> parse_method(const std::string& s) {
    if (s == "tse") return Method::TSE;
    if (s == "cpe1") return Method::CPE1;
    if (s == "cpe2") return Method::CPE2;
    if (s == "pae") return Method::PAE;
    return std::nullopt;
}

CoeffVector tse_coefficients(Kind kind, int order) {
    if (order < 0) throw ValidationError("tse_coefficients: order must be >= 0");
    CoeffVector cv;
    cv.method = Method::TSE;
    cv.kind = kind;
    cv.values.reserve(static_cast<std::size_t>(order) + 1);
    // c_{n+1} = c_n * (s - n) / (n + 1) with s = 1/2 for sqrt, -1/2 for invsqrt
    const long long s_num = kind == Kind::Sqrt ? 1 : -1;
    Rational c(1);
    bool exact_ok = true;
    double cd = 1.0;
    for (int n = 0; n <= order; ++n) {
        if (exact_ok) {
            cv.exact.push_back(c);
            cd = c.to_double();
        }
        cv.values.push_back(cd);
        if (n == order) break;
        if (exact_ok) {
            try {
                c = c * Rational::of(s_num - 2 * static_cast<long long>(n),
                                     2 * (static_cast<long long>(n) + 1));
            } catch (const Error&) {
                exact_ok = false; // continue in floating point
            }
        }
        cd *= (0.5 * s_num - n) / (n + 1.0);
    }
    return cv;
}

CoeffVector cpe_coefficients(Kind kind, double n0, int order) {
    if (!(n0 > 0.0 && n0 < 1.0)) throw ValidationError("cpe_coefficients: n0 must be in (0, 1)");
    if (order < 0) throw ValidationError("cpe_coefficients: order must be >= 0");
    CoeffVector cv;
    cv.method = Method::CPE1;
    cv.kind = kind;
    cv.n0 = n0;

    const int ncoef = order + 1;
    auto pass = [&](int m) {
        std::vector<double> c(static_cast<std::size_t>(ncoef), 0.0);
        std::vector<double> comp(static_cast<std::size_t>(ncoef), 0.0);
        for (int j = 0; j < m; ++j) {
            const double theta = (j + 0.5) * std::numbers::pi / m;
            const double x = 0.5 * ((1.0 - n0) * std::cos(theta) + (1.0 + n0));
            const double g = kind == Kind::Sqrt ? std::sqrt(x) : 1.0 / std::sqrt(x);
            for (int n = 0; n < ncoef; ++n) {
                // Kahan-compensated accumulation
                const double term = g * std::cos(n * theta);
                const double y = term - comp[static_cast<std::size_t>(n)];
                const double t = c[static_cast<std::size_t>(n)] + y;
                comp[static_cast<std::size_t>(n)] = (t - c[static_cast<std::size_t>(n)]) - y;
                c[static_cast<std::size_t>(n)] = t;
            }
        }
        for (double& v : c) v *= 2.0 / m;
        return c;
    };

    int m = std::max(64 * ncoef, 128);
    std::vector<double> prev = pass(m);
    for (;;) {
        m *= 2;
        std::vector<double> cur = pass(m);
        double diff = 0.0;
        for (int n = 0; n < ncoef; ++n)
            diff = std::max(diff, std::abs(cur[static_cast<std::size_t>(n)] -
                                           prev[static_cast<std::size_t>(n)]));
        if (diff <= 1e-12 || m >= (1 << 22)) {
            cv.values = std::move(cur);
            return cv;
        }
        prev = std::move(cur);
    }
}

CoeffVector cpe_tabulated(Kind kind, N0Class cls) {
    CoeffVector cv;
    cv.method = Method::CPE2;
    cv.kind = kind;
    cv.n0 = n0_class_bound(cls);
    const Frac* row = kind == Kind::Sqrt ? kChebSqrt[class_index(cls)]
                                         : kChebInvSqrt[class_index(cls)];
    for (int n = 0; n < 20; ++n) {
        cv.exact.push_back(Rational::of(row[n].num, row[n].den));
        cv.values.push_back(cv.exact.back().to_double());
    }
    return cv;
}

std::optional<int> cpe_order(Kind kind, N0Class cls, double delta) {
    int col = -1;
    for (int i = 0; i < 5; ++i) {
        const double d = std::pow(10.0, -(i + 2));
        if (std::abs(std::log10(delta) - std::log10(d)) < 0.05) col = i;
    }
    if (col < 0) throw ValidationError("cpe_order: delta must be one of 1e-2..1e-6");
    const int v = kind == Kind::Sqrt ? kChebOrderSqrt[class_index(cls)][col]
                                     : kChebOrderInvSqrt[class_index(cls)][col];
    if (v < 0) return std::nullopt;
    return v;
}

int cpe_order_bound(Kind kind, double n0, double delta, int max_order) {
    if (!(delta > 0.0)) throw ValidationError("cpe_order_bound: delta must be positive");
    // |T_n| <= 1 on the interval, so sum_{n>N} |c_n| bounds the sup error of
    // the order-N truncation; the matrix-relative metric divides by
    // sup |f| = 1 (sqrt) or 1/sqrt(n0) (invsqrt).
    const double rel_factor = kind == Kind::Sqrt ? 1.0 : std::sqrt(n0);
    int hi = 64;
    for (;;) {
        hi = std::min(hi, max_order + 32);
        const CoeffVector cv = cpe_coefficients(kind, n0, hi);
        double tail = 0.0;
        // tail sums from the top; usable once the remainder beyond hi is
        // negligible against delta
        if (std::abs(cv.values.back()) * rel_factor < 1e-3 * delta) {
            for (int n = hi; n >= 1; --n) {
                tail += std::abs(cv.values[static_cast<std::size_t>(n)]);
                if (tail * rel_factor > delta) {
                    if (n > max_order)
                        throw UnavailableError("cpe_order_bound: order above cap " +
                                               std::to_string(max_order));
                    return n; // order n is the smallest with tail(n) <= delta
                }
            }
            return 0;
        }
        if (hi >= max_order + 32)
            throw UnavailableError("cpe_order_bound: no order below cap " +
                                   std::to_string(max_order) + " reaches delta");
        hi *= 2;
    }
}

CoeffVector pae_coefficients(Kind kind, int order) {
    if (order < 0) throw ValidationError("pae_coefficients: order must be >= 0");
    if (order > 60) throw ValidationError("pae_coefficients: order above exact range (60)");
    // Binomial row of (1 + u)^(2N+1): the even-power half gives the numerator
    // coefficients of the [N/N] approximant of sqrt(x) at x = 1.
    const int m = 2 * order + 1;
    std::vector<Rational> pascal(static_cast<std::size_t>(m) + 1, Rational(1));
    for (int row = 1; row <= m; ++row)
        for (int k = row - 1; k >= 1; --k) pascal[static_cast<std::size_t>(k)] =
            pascal[static_cast<std::size_t>(k)] + pascal[static_cast<std::size_t>(k) - 1];
    CoeffVector cv;
    cv.method = Method::PAE;
    cv.kind = kind;
    for (int n = 0; n <= order; ++n) {
        cv.exact.push_back(pascal[static_cast<std::size_t>(2 * n)]);
        cv.values.push_back(cv.exact.back().to_double());
    }
    return cv;
}

double eval_scalar(const CoeffVector& c, double x) {
    const std::vector<double>& v = c.values;
    const int order = c.order();
    switch (c.method) {
        case Method::TSE: {
            double r = v[static_cast<std::size_t>(order)];
            for (int n = order - 1; n >= 0; --n) r = r * (x - 1.0) + v[static_cast<std::size_t>(n)];
            return r;
        }
        case Method::CPE1:
        case Method::CPE2: {
            const double w = (2.0 * x - (c.n0 + 1.0)) / (1.0 - c.n0);
            double t_prev = 1.0;
            double t_cur = w;
            double s = 0.5 * v[0] + (order >= 1 ? v[1] * t_cur : 0.0);
            for (int n = 2; n <= order; ++n) {
                const double t_next = 2.0 * w * t_cur - t_prev;
                s += v[static_cast<std::size_t>(n)] * t_next;
                t_prev = t_cur;
                t_cur = t_next;
            }
            return s;
        }
        case Method::PAE: {
            // even polynomial E(x) = sum c_n x^n, odd polynomial O(x) = sum c_n x^(N-n)
            double e = v[static_cast<std::size_t>(order)];
            double o = v[0];
            for (int n = order - 1; n >= 0; --n) {
                e = e * x + v[static_cast<std::size_t>(n)];
                o = o * x + v[static_cast<std::size_t>(order - n)];
            }
            return c.kind == Kind::Sqrt ? e / o : o / e;
        }
    }
    throw ValidationError("eval_scalar: unknown method");
}

} // namespace gramroot
