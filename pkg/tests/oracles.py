"""Reference values computed independently of the library under test.

Three routes, all running in mpmath extended precision and sharing no
code with the package:

* ``series_li``: brute-force partial sums of sum_{n>=1} z^n / n^alpha
  with an explicit geometric tail bound.  Inside the unit disk only.
* ``dirichlet_zeta``: direct Dirichlet summation to a large cutoff with
  a short Euler-Maclaurin tail.  Nothing in common with the library's
  small-cutoff zeta (different N by four orders of magnitude, different
  correction depth, 50-digit arithmetic).
* ``integral_li``: the real-axis integral representation pushed through
  mpmath's own adaptive quadrature, for anchor points outside the disk.

``FROZEN`` was generated once by ``python3 tests/oracles.py`` and pasted
in, so the suite compares against fixed constants; the generator stays
here so the table can be audited or regenerated.  Values are stored as
30-digit strings; ``frozen_complex``/``frozen_real`` round them to
machine precision for use in assertions.
"""

from __future__ import annotations

# Canonical double-precision test points.  Constructed once and written
# out exactly so the oracle is evaluated at the very same binary64
# inputs the tests feed to the library.
Z_HEX = complex(0.30000000000000004, 0.5196152422706631)  # 0.6 * exp(i pi/3)
Z_EXP_M1 = 0.36787944117144233  # exp(-1)
Z_EXP_MHALF = 0.6065306597126334  # exp(-1/2)

FROZEN: dict[str, tuple[str, str]] = {
    # name: (real part, imag part), 30 significant digits
    "li_half_quarter": ("0.305734930399296380173999566981", "0.0"),
    "li_half_0p9": ("4.02195042747336131916723349885", "0.0"),
    "li_3half_0p5": ("0.624837020819913853633819312946", "0.0"),
    "li_mhalf_0p3": ("0.498314387036833439177136688806", "0.0"),
    "li_m3half_0p3": ("0.803887928285340698701075156286", "0.0"),
    "li_mhalf_zhex": ("-0.270774926507631989531578682817", "0.669108881446781231251579543555"),
    "li_m3half_zhex": ("-0.8848759425644256305087604786", "0.316863327513578472364943809408"),
    "li_mhalf_e_m1": ("0.7072407184868038345977641598", "0.0"),
    "li_m3half_e_mhalf": ("7.49075309866861004740726212712", "0.0"),
    "li_calpha_0p3": ("0.382444911421187115786537453516", "-0.0539355793027794154908221892263"),
    "ia_half_m2": ("-0.891288711552123301981519554918", "0.0"),
    "ia_half_m10": ("-1.58828513788913435034973484961", "0.0"),
    "ia_3half_m2": ("-1.28138038315976963883198467958", "0.0"),
    "ia_calpha_m2": ("-0.817011723162228627570342385096", "-0.318925722664200677775661001772"),
    "zeta_3_2": ("2.61237534868548834334856756792", "0.0"),
    "zeta_5_2": ("1.34148725725091717975676969335", "0.0"),
}


def frozen_complex(name: str) -> complex:
    re, im = FROZEN[name]
    return complex(float(re), float(im))


def frozen_real(name: str) -> float:
    re, im = FROZEN[name]
    assert float(im) == 0.0
    return float(re)


def series_li(alpha, z, terms=4000):
    """Partial sums of the defining series with a certified tail bound."""
    from mpmath import mp, mpc, exp, log, fabs

    alpha = mpc(alpha)
    z = mpc(z)
    assert fabs(z) < 1
    total = mp.zero
    term = mp.zero
    for n in range(1, terms + 1):
        term = z**n * exp(-alpha * log(n))
        total += term
    # |t_{n+1}/t_n| <= |z| * ((n+1)/n)^max(0, -Re alpha) is decreasing in n
    growth = max(0.0, float(-alpha.real))
    ratio = fabs(z) * ((terms + 1) / terms) ** growth
    assert ratio < 1
    tail = fabs(term) * ratio / (1 - ratio)
    assert tail < mp.mpf(10) ** (-mp.dps + 8), f"tail {tail} too large at dps={mp.dps}"
    return total


def dirichlet_zeta(s, cutoff=100000):
    """Direct Dirichlet sum with a two-term Euler-Maclaurin tail."""
    from mpmath import mp, mpf, mpc

    s = mpc(s)
    n = mpf(cutoff)
    total = sum(mpf(k) ** (-s) for k in range(1, cutoff))
    # integral tail + boundary + B2 + B4 corrections at the cutoff
    total += n ** (1 - s) / (s - 1) + n ** (-s) / 2 + s * n ** (-s - 1) / 12
    total -= s * (s + 1) * (s + 2) * n ** (-s - 3) / 720
    return total


def integral_li(alpha, z):
    """(1/Gamma(alpha)) * int_0^inf q^(alpha-1) z / (e^q - z) dq."""
    from mpmath import mp, mpc, quad, gamma, exp, log

    alpha = mpc(alpha)
    z = mpc(z)

    def f(q):
        return exp((alpha - 1) * log(q)) * z / (exp(q) - z)

    val = quad(f, [0, 1, 10, mp.dps * 3], maxdegree=10)
    return val / gamma(alpha)


def _fmt(x) -> tuple[str, str]:
    from mpmath import mp, nstr

    return (nstr(x.real, 30), nstr(x.imag, 30))


def _generate() -> None:
    from mpmath import mp, mpf, mpc, pi, log, zeta, sqrt, mpmathify

    mp.dps = 50
    table: dict[str, tuple[str, str]] = {}

    # brute-force series anchors
    table["li_half_quarter"] = _fmt(series_li(0.5, 0.25))
    table["li_half_0p9"] = _fmt(series_li(0.5, 0.9))
    table["li_3half_0p5"] = _fmt(series_li(1.5, 0.5))
    table["li_mhalf_0p3"] = _fmt(series_li(-0.5, 0.3))
    table["li_m3half_0p3"] = _fmt(series_li(-1.5, 0.3))
    table["li_mhalf_zhex"] = _fmt(series_li(-0.5, Z_HEX))
    table["li_m3half_zhex"] = _fmt(series_li(-1.5, Z_HEX))
    table["li_mhalf_e_m1"] = _fmt(series_li(-0.5, Z_EXP_M1))
    table["li_m3half_e_mhalf"] = _fmt(series_li(-1.5, Z_EXP_MHALF))
    table["li_calpha_0p3"] = _fmt(series_li(mpc(0.3, 0.7), 0.3))

    # sanity: the dilogarithm closed form and two rational orders
    dilog = series_li(2, 0.5)
    assert abs(dilog - (pi**2 / 12 - log(2) ** 2 / 2)) < mpf(10) ** -40
    assert abs(series_li(-1, 0.5) - 2) < mpf(10) ** -40
    assert abs(series_li(-2, 0.5) - 6) < mpf(10) ** -40

    # integral anchors outside the unit disk
    table["ia_half_m2"] = _fmt(integral_li(0.5, -2))
    table["ia_half_m10"] = _fmt(integral_li(0.5, -10))
    table["ia_3half_m2"] = _fmt(integral_li(1.5, -2))
    table["ia_calpha_m2"] = _fmt(integral_li(mpc(0.3, 0.7), -2))

    # sanity: both routes agree where both converge (the quadrature is
    # good for roughly 28 digits; anchors are consumed at 1e-8..1e-12)
    assert abs(integral_li(0.5, 0.25) - series_li(0.5, 0.25)) < mpf(10) ** -25

    # direct Dirichlet zeta, cross-checked against mpmath's own zeta
    for name, s in (("zeta_3_2", 1.5), ("zeta_5_2", 2.5)):
        v = dirichlet_zeta(s)
        assert abs(v - zeta(s)) < mpf(10) ** -30
        table[name] = _fmt(v)

    print("FROZEN: dict[str, tuple[str, str]] = {")
    for name, (re, im) in table.items():
        print(f'    "{name}": ("{re}", "{im}"),')
    print("}")


if __name__ == "__main__":
    _generate()
