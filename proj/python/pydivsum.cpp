// Python bindings for the main library operations. Arbitrary-precision
// values cross the boundary as decimal strings; exact integers become
// Python ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "divsum/arith.hpp"
#include "divsum/errors.hpp"
#include "divsum/identities.hpp"
#include "divsum/kernels.hpp"
#include "divsum/mellin.hpp"
#include "divsum/recovery.hpp"
#include "divsum/specfun.hpp"

namespace py = pybind11;
using namespace divsum;

namespace {

py::int_ big_to_py(const mpz_class& z) {
    PyObject* obj = PyLong_FromString(z.get_str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

Complex make_complex(const std::string& re, const std::string& im, mpfr_prec_t prec) {
    return Complex(Real(re, prec), Real(im, prec));
}

std::pair<std::string, std::string> complex_out(const Complex& z, int sig) {
    return {to_sci_string(z.re, sig), to_sci_string(z.im, sig)};
}

kernels::KernelSpec make_spec(const std::string& family, int a, int k, const std::string& form) {
    kernels::KernelSpec spec;
    spec.a = a;
    spec.k = k;
    if (family == "cor3") spec.variant = kernels::Variant::cor3;
    else if (family == "constraint") spec.variant = kernels::Variant::constraint;
    else if (family == "bessel0") { spec.variant = kernels::Variant::bessel_a0; spec.a = 0; }
    else if (family == "higher-hom") spec.variant = kernels::Variant::higher_homogeneous;
    else if (family == "higher-inhom") spec.variant = kernels::Variant::higher_inhomogeneous;
    else if (family == "normalized-q") spec.variant = kernels::Variant::normalized_Q;
    else throw SpecError("unknown family " + family);
    spec.form = form == "1f1" ? kernels::KernelForm::hyp1f1 : kernels::KernelForm::poly;
    return spec;
}

}  // namespace

PYBIND11_MODULE(pydivsum, m) {
    m.doc() = "Exponential-sum identities of divisor functions: verification, "
              "recovery by matrix inversion, and special-function plumbing.";

    py::register_exception<PrecisionError>(m, "PrecisionError");
    py::register_exception<DomainError>(m, "DomainError");

    m.def("sigma", [](int a, long n) { return big_to_py(arith::sigma(a, n)); },
          py::arg("a"), py::arg("n"), "Exact divisor power sum sigma_a(n).");

    m.def("primes_up_to", [](long limit) { return arith::primes_up_to(limit).primes; },
          py::arg("limit"));

    m.def("factorize", [](long n) { return arith::factorize(n); }, py::arg("n"));

    m.def("smooth_set", [](long p, long bound) { return arith::smooth_set(p, bound).members; },
          py::arg("p_limit"), py::arg("bound"));

    m.def("zeta",
          [](const std::string& re, const std::string& im, int digits) {
              PrecisionContext ctx(digits);
              return complex_out(specfun::zeta(make_complex(re, im, ctx.prec()), ctx), digits);
          },
          py::arg("re"), py::arg("im") = "0", py::arg("digits") = 40);

    m.def("gamma",
          [](const std::string& re, const std::string& im, int digits) {
              PrecisionContext ctx(digits);
              return complex_out(specfun::gamma(make_complex(re, im, ctx.prec()), ctx), digits);
          },
          py::arg("re"), py::arg("im") = "0", py::arg("digits") = 40);

    m.def("xi",
          [](const std::string& re, const std::string& im, int digits) {
              PrecisionContext ctx(digits);
              return complex_out(specfun::xi(make_complex(re, im, ctx.prec()), ctx), digits);
          },
          py::arg("re"), py::arg("im") = "0", py::arg("digits") = 40);

    m.def("bessel_k",
          [](int order, const std::string& x, int digits) {
              PrecisionContext ctx(digits);
              return to_sci_string(specfun::bessel_K(order, Real(x, ctx.prec()), ctx), digits);
          },
          py::arg("order"), py::arg("x"), py::arg("digits") = 40);

    m.def("kernel_value",
          [](const std::string& family, int a, int k, long n, const std::string& form, int digits) {
              kernels::KernelSpec spec = make_spec(family, a, k, form);
              spec.validate();
              PrecisionContext ctx(digits);
              switch (spec.variant) {
                  case kernels::Variant::constraint:
                      return to_sci_string(spec.form == kernels::KernelForm::poly
                                               ? kernels::constraint_kernel_poly(a, k, n, ctx)
                                               : kernels::constraint_kernel_1f1(a, k, n, ctx),
                                           digits);
                  case kernels::Variant::cor3:
                      return to_sci_string(kernels::cor3_kernel(a, n, ctx), digits);
                  case kernels::Variant::bessel_a0:
                      return to_sci_string(kernels::bessel_kernel_a0(n, ctx), digits);
                  case kernels::Variant::normalized_Q:
                      return to_sci_string(kernels::normalized_Q(a, k, n, ctx), digits);
                  default:
                      return to_sci_string(kernels::higher_a_kernel(a, spec.variant, n, ctx), digits);
              }
          },
          py::arg("family"), py::arg("a"), py::arg("k") = -1, py::arg("n") = 1,
          py::arg("form") = "poly", py::arg("digits") = 40);

    m.def("verify_identity",
          [](const std::string& family, int a, int k, long trunc, const std::string& form,
             int digits) {
              kernels::KernelSpec spec = make_spec(family, a, k, form);
              PrecisionContext ctx(digits);
              identities::IdentityReport rep = identities::evaluate_identity(spec, trunc, ctx);
              py::dict d;
              d["id"] = rep.spec.id();
              d["value"] = to_sci_string(rep.value, 30);
              d["target"] = rep.target.get_str();
              d["abs_error"] = to_sci_string(rep.abs_error, 30);
              d["tail_bound"] = to_sci_string(rep.tail_bound, 30);
              d["pass"] = rep.pass;
              return d;
          },
          py::arg("family"), py::arg("a"), py::arg("k") = -1, py::arg("trunc") = 40,
          py::arg("form") = "poly", py::arg("digits") = 120);

    m.def("partial_sums",
          [](const std::string& family, int a, const std::vector<long>& cutoffs, int digits) {
              kernels::KernelSpec spec = make_spec(family, a, -1, "poly");
              PrecisionContext ctx(digits);
              auto table = identities::partial_sums(spec, cutoffs, ctx);
              std::vector<std::string> out;
              for (const auto& v : table.values) out.push_back(to_sci_string(v, 30));
              return out;
          },
          py::arg("family"), py::arg("a"), py::arg("cutoffs"), py::arg("digits") = 120);

    m.def("recover",
          [](int a, long table_N, int digits) {
              long module_N = table_N + 1;
              recovery::RecoveryResult res =
                  digits <= 0 ? recovery::solve_divisors_auto(a, module_N)
                              : recovery::solve_divisors(a, module_N, PrecisionContext(digits));
              py::dict d;
              d["a"] = res.a;
              d["digits_used"] = res.digits_used;
              d["max_residual"] = to_sci_string(res.max_residual, 20);
              py::list rows;
              for (const auto& row : res.rows) {
                  py::dict r;
                  r["n"] = row.n;
                  r["approx"] = to_table_string(row.approx, 30);
                  r["rounded"] = big_to_py(row.rounded);
                  r["oracle"] = big_to_py(row.oracle);
                  r["match"] = row.match;
                  rows.append(r);
              }
              d["rows"] = rows;
              return d;
          },
          py::arg("a"), py::arg("N"), py::arg("digits") = 0);

    m.def("vandermonde_det", [](long N) { return big_to_py(recovery::vandermonde_det(N)); },
          py::arg("N"));

    m.def("j_pair_defect",
          [](int a, long n, const std::string& s0re, const std::string& s0im, int tol_digits) {
              PrecisionContext ctx(tol_digits + 20);
              Complex s0 = make_complex(s0re, s0im, ctx.prec());
              Complex c = mellin::j_closed(a, n, s0, ctx);
              mellin::LineIntegralSpec spec;
              spec.tol_digits = tol_digits;
              spec.abscissa = std::max(s0.re.to_double(), 3.0) + 1.0;
              Complex q = mellin::j_quadrature(a, n, s0, spec, ctx);
              return to_sci_string(abs(c - q), 10);
          },
          py::arg("a"), py::arg("n"), py::arg("s0re"), py::arg("s0im") = "0",
          py::arg("tol_digits") = 20);

    m.def("xi_functional_equation_defect",
          [](int N, int a, const std::string& s0re, const std::string& s0im, int digits) {
              PrecisionContext ctx(digits);
              Complex s0 = make_complex(s0re, s0im, ctx.prec());
              Complex x1 = mellin::xi_approx_via_tail(N, a, s0, 40, ctx);
              Complex refl = Complex(Real(a + 1, ctx.prec()), Real(0, ctx.prec())) - s0;
              Complex x2 = mellin::xi_approx_via_tail(N, a, refl, 40, ctx);
              Real scale = abs(x1);
              if (scale < 1) scale = Real(1, scale.prec());
              return to_sci_string(abs(x1 - x2) / scale, 10);
          },
          py::arg("N"), py::arg("a"), py::arg("s0re"), py::arg("s0im") = "0",
          py::arg("digits") = 40);
}
