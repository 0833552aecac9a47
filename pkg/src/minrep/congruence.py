"""Level computation and congruence/noncongruence certificates.

The level of rho_{m,n} is the order N of rho(T) in the image group; rho(T)
is diagonal with entries e^{2 pi i r_j}, so N is the lcm of the reduced
denominators of the r_j, and it always divides 48 p q.

A congruence representation of level N factors through SL2(Z/NZ), which
splits as a product over the prime powers r^t dividing N exactly.  By the
Nobs-Wolfart classification the smallest dimension of a nontrivial
irreducible representation of SL2(Z/r^t Z) is

    1            for r = 2, t <= 2,
    2            for r = 2, t = 3,
    3 * 2^(t-4)  for r = 2, t >= 4,
    (r-1)/2      for r > 2, t = 1,
    (r^2-1) r^(t-2) / 2   for r > 2, t > 1,

and multiplying these minima over the prime powers in N lower-bounds the
dimension of any congruence representation of that level.  Whenever the
actual dimension s falls below the bound, the representation cannot be
congruence; that certificate drives all the arithmetic noncongruence
criteria here.

Two valuation facts pin the level down: for a prime r > 3 dividing p with
m <= p - 4 one has nu_r(N) = nu_r(p), and for r > 3 dividing q with
n <= q - 3 one has nu_r(N) = nu_r(q).  Combined with the exact 2-adic
count (for p, q, m, n all odd every numerator of r_j is divisible by 2 but
not 4, so nu_2(N) = 3), these give clean noncongruence statements when p
and q are powers of primes exceeding 3.
"""

from dataclasses import dataclass, field
from math import isqrt, lcm

from .errors import DimensionTooLarge, HypothesisNotMet, NotPrime
from .fusion import rep_dimension
from .repdata import _is_prime, rep_profile

CONGRUENCE = "congruence"
NONCONGRUENCE = "noncongruence"
UNKNOWN = "unknown"

# criterion tags carried by verdicts
VACUUM = "vacuum"
ONE_DIMENSIONAL = "one-dimensional"
DIM2_CONSTANT_REP = "dim2-constant-rep"
DIM2_P5 = "dim2-p5"
DIM2_INFINITE_IMAGE = "dim2-infinite-image"
DIM3_UNDETERMINED = "dim3-undetermined"
DIM3_LEVEL_DIVISOR = "dim3-level-divisor"
DIM3_INFINITE_IMAGE = "dim3-infinite-image"
NW_DIMENSION_BOUND = "nw-dimension-bound"
PRIME_POWER_BOUND = "prime-power-bound"
BOUNDARY_PRIME_POWER = "boundary-prime-power"
DISTINCT_PRIMES = "distinct-primes"
NO_CRITERION = "none"

#: 2^6 * 3^3 * 5^2 * 7^2; the finite-image three-dimensional family at
#: (p-2, q-3) is noncongruence whenever q does not divide this number
DIM3_DIVISOR_BOUND = 2 ** 6 * 3 ** 3 * 5 ** 2 * 7 ** 2


@dataclass(frozen=True)
class Level:
    """Order N of rho(T) with its prime factorization."""

    N: int
    factorization: tuple

    def nu(self, r):
        """r-adic valuation of N."""
        for prime, t in self.factorization:
            if prime == r:
                return t
        return 0


def factorize(n):
    """Prime factorization by trial division, as a tuple of (prime, exp)."""
    assert n >= 1
    out = []
    for r in range(2, isqrt(n) + 1):
        if r * r > n:
            break
        t = 0
        while n % r == 0:
            n //= r
            t += 1
        if t:
            out.append((r, t))
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def level(profile):
    """Level of rho_{m,n}: the lcm of the reduced denominators of the r_j.

    Since rho(T) is diagonal this equals the order of rho(T) in the image
    group.  It divides 48 p q.
    """
    n = 1
    for rj in profile.r:
        n = lcm(n, rj.denominator)
    assert 48 * profile.model.p * profile.model.q % n == 0
    return Level(n, factorize(n))


def nu(r, x):
    """r-adic valuation of the nonzero integer x."""
    assert x != 0
    t = 0
    while x % r == 0:
        x //= r
        t += 1
    return t


def nw_min_dim(r, t):
    """Smallest dimension of a nontrivial irreducible representation of
    SL2(Z/r^t Z) (Nobs-Wolfart)."""
    if not _is_prime(r):
        raise NotPrime("%s is not prime" % r)
    if t < 1:
        raise NotPrime("exponent must be >= 1, got %s" % t)
    if r == 2:
        if t <= 2:
            return 1
        if t == 3:
            return 2
        return 3 * 2 ** (t - 4)
    if t == 1:
        return (r - 1) // 2
    return (r * r - 1) * r ** (t - 2) // 2


def min_congruence_dim(lv):
    """Product of the Nobs-Wolfart minima over the prime powers of N.

    Lower-bounds the dimension of a congruence representation whose T-image
    has order N; returns 1 for N = 1.  Accepts a Level or a plain integer.
    """
    factorization = lv.factorization if isinstance(lv, Level) else factorize(lv)
    out = 1
    for r, t in factorization:
        out *= nw_min_dim(r, t)
    return out


@dataclass(frozen=True)
class NWCertificate:
    """Witness that s < min_congruence_dim(N), hence noncongruence."""

    level: Level
    min_dim: int
    dimension: int


def nw_noncongruence_certificate(profile):
    """The dimension-vs-level certificate, or None when the bound is idle."""
    lv = level(profile)
    bound = min_congruence_dim(lv)
    if profile.s < bound:
        return NWCertificate(lv, bound, profile.s)
    return None


@dataclass(frozen=True)
class ValuationReport:
    """Computed nu_r(N) next to the predicted nu_r(p) or nu_r(q)."""

    prime: int
    side: str          # "p" or "q"
    nu_level: int
    nu_model: int

    @property
    def matches(self):
        return self.nu_level == self.nu_model


def valuation_check(model, label, r, profile=None):
    """Check nu_r(N) against nu_r(p) (resp. nu_r(q)) for a prime r > 3.

    Hypotheses: r > 3 prime, and either r | p with m <= p - 4, or r | q
    with n <= q - 3; anything else raises HypothesisNotMet.  The level is
    computed from the actual exponent denominators, not assumed.
    """
    if not _is_prime(r) or r <= 3:
        raise HypothesisNotMet("a prime r > 3 is required, got %s" % r)
    p, q, m, n = model.p, model.q, label.m, label.n
    if p % r == 0:
        if m > p - 4:
            raise HypothesisNotMet("need m <= p - 4 for the p-side lemma")
        side, nu_model = "p", nu(r, p)
    elif q % r == 0:
        if n > q - 3:
            raise HypothesisNotMet("need n <= q - 3 for the q-side lemma")
        side, nu_model = "q", nu(r, q)
    else:
        raise HypothesisNotMet("%s divides neither p nor q" % r)
    if profile is None:
        profile = rep_profile(model, label)
    lv = level(profile)
    return ValuationReport(r, side, lv.nu(r), nu_model)


def prime_power(n):
    """(r, a) with n = r^a and r prime, or None."""
    for r, t in factorize(n):
        if r ** t == n:
            return (r, t)
    return None


def _ceil_power(r, a):
    # ceil(r^(a-2)): 1 for a <= 2, else the integer power
    return 1 if a <= 2 else r ** (a - 2)


@dataclass(frozen=True)
class CriterionResult:
    """Outcome of an arithmetic noncongruence predicate with its trace."""

    holds: bool
    trace: dict = field(default_factory=dict)

    def __bool__(self):
        return self.holds


def prime_power_criterion(model, label):
    """Noncongruence test when p = r^a and q = s^b for distinct primes > 3.

    With alpha = ceil(r^(a-2)) and beta = ceil(s^(b-2)), the representation
    is noncongruence whenever

        alpha <= m <= p - 4,   beta <= n <= q - 4,

    and at least one of alpha < m, beta < n holds.  Returns a
    CriterionResult whose trace records the shape data or the reason for
    failure.
    """
    p, q, m, n = model.p, model.q, label.m, label.n
    pp, qq = prime_power(p), prime_power(q)
    if pp is None or pp[0] <= 3:
        return CriterionResult(False, {"reason": "p is not a power of a prime > 3"})
    if qq is None or qq[0] <= 3:
        return CriterionResult(False, {"reason": "q is not a power of a prime > 3"})
    alpha = _ceil_power(*pp)
    beta = _ceil_power(*qq)
    trace = {"alpha": alpha, "beta": beta, "p_base": pp[0], "q_base": qq[0]}
    if not (alpha <= m <= p - 4):
        trace["reason"] = "m outside [alpha, p-4]"
        return CriterionResult(False, trace)
    if not (beta <= n <= q - 4):
        trace["reason"] = "n outside [beta, q-4]"
        return CriterionResult(False, trace)
    if not (alpha < m or beta < n):
        trace["reason"] = "neither alpha < m nor beta < n"
        return CriterionResult(False, trace)
    return CriterionResult(True, trace)


def boundary_prime_power_criterion(model, label):
    """Noncongruence test on the boundary shapes m = p-2 and n = q-2.

    Case "i": m = p - 2 and q = s^b a power of a prime s > 3 with
    beta < n <= q - 4.  Case "ii": n = q - 2 and p = r^a a power of a
    prime r > 3 with alpha < m <= p - 4.  Returns (holds, case) with case
    in {"i", "ii", None}.
    """
    p, q, m, n = model.p, model.q, label.m, label.n
    if m == p - 2:
        qq = prime_power(q)
        if qq is not None and qq[0] > 3:
            beta = _ceil_power(*qq)
            if beta < n <= q - 4:
                return True, "i"
    if n == q - 2:
        pp = prime_power(p)
        if pp is not None and pp[0] > 3:
            alpha = _ceil_power(*pp)
            if alpha < m <= p - 4:
                return True, "ii"
    return False, None


def distinct_primes_criterion(model, label):
    """Noncongruence for p, q distinct primes > 3 and (m, n) outside the
    four exceptional pairs (1,1), (1,q-2), (p-2,1), (p-2,q-2)."""
    p, q, m, n = model.p, model.q, label.m, label.n
    if not (_is_prime(p) and _is_prime(q) and p > 3 and q > 3 and p != q):
        return False
    return (m, n) not in {(1, 1), (1, q - 2), (p - 2, 1), (p - 2, q - 2)}


@dataclass(frozen=True)
class CongruenceVerdict:
    """Congruence status with the criterion that decided it."""

    status: str
    criterion: str
    details: dict = field(default_factory=dict)


def classify_low_dim(model, label):
    """Classification of the representations of dimension s <= 3.

    s = 1 (label (p-2, q-1)): the trivial representation, congruence.
    s = 2, (p-2, q-2): one fixed congruence representation with
        rho(T) = diag(e(5/24), e(-1/24)) for every p, q.
    s = 2, (p-4, q-1): congruence iff p = 5; infinite image otherwise.
    s = 3, (p-2, q-3): finite image; noncongruence when q does not divide
        2^6 3^3 5^2 7^2, undetermined otherwise.
    s = 3, (p-6, q-1): infinite image, noncongruence.
    """
    p, q, m, n = model.p, model.q, label.m, label.n
    s = rep_dimension(model, label)
    if s > 3:
        raise DimensionTooLarge("low-dimension classification needs s <= 3, got %s" % s)
    if s == 1:
        return CongruenceVerdict(CONGRUENCE, ONE_DIMENSIONAL, {"rho_T": "1"})
    if s == 2:
        if (m, n) == (p - 2, q - 2):
            details = {"r": ["5/24", "-1/24"]}
            if p < 5 or q < 5:
                # the classification is stated for p, q >= 5; the closed
                # forms still apply to this shape
                details["outside_stated_range"] = True
            return CongruenceVerdict(CONGRUENCE, DIM2_CONSTANT_REP, details)
        assert (m, n) == (p - 4, q - 1)
        if p == 5:
            return CongruenceVerdict(CONGRUENCE, DIM2_P5, {"level": 60})
        return CongruenceVerdict(NONCONGRUENCE, DIM2_INFINITE_IMAGE, {})
    assert s == 3
    if (m, n) == (p - 2, q - 3):
        if DIM3_DIVISOR_BOUND % q != 0:
            return CongruenceVerdict(
                NONCONGRUENCE, DIM3_LEVEL_DIVISOR,
                {"q": q, "divisor_bound": DIM3_DIVISOR_BOUND},
            )
        return CongruenceVerdict(
            UNKNOWN, DIM3_UNDETERMINED,
            {"note": "finite image; congruence status undetermined"},
        )
    assert (m, n) == (p - 6, q - 1)
    return CongruenceVerdict(NONCONGRUENCE, DIM3_INFINITE_IMAGE, {})


def congruence_verdict(model, label, profile=None):
    """Aggregate verdict over all criteria, with attributed provenance.

    Evaluation order: the explicit low-dimension classification (s <= 3)
    when decisive, then the vacuum label (1, 1) which is classically
    congruence, then the dimension-vs-level certificate, then the three
    arithmetic prime-power criteria.  Whenever one of the arithmetic
    criteria fires, the certificate must fire as well (its proof is the
    certificate); this consistency is asserted.
    """
    if profile is None:
        profile = rep_profile(model, label)
    s = profile.s
    lv = level(profile)
    bound = min_congruence_dim(lv)
    cert = NWCertificate(lv, bound, s) if s < bound else None

    ppc = prime_power_criterion(model, label)
    bpc, bpc_case = boundary_prime_power_criterion(model, label)
    dpc = distinct_primes_criterion(model, label)
    agreeing = []
    if cert is not None:
        agreeing.append(NW_DIMENSION_BOUND)
    if ppc:
        agreeing.append(PRIME_POWER_BOUND)
    if bpc:
        agreeing.append(BOUNDARY_PRIME_POWER)
    if dpc:
        agreeing.append(DISTINCT_PRIMES)
    assert not ((ppc or bpc or dpc) and cert is None), \
        "arithmetic criterion fired without the dimension bound"

    base = {
        "s": s,
        "level": lv.N,
        "level_factorization": [list(ft) for ft in lv.factorization],
        "min_congruence_dim": bound,
        "agreeing_criteria": agreeing,
    }

    if s <= 3:
        low = classify_low_dim(model, label)
        if low.status != UNKNOWN:
            assert not (low.status == CONGRUENCE and cert is not None), \
                "congruence classification contradicts the dimension bound"
            details = dict(base)
            details.update(low.details)
            return CongruenceVerdict(low.status, low.criterion, details)

    if (label.m, label.n) == (1, 1):
        assert cert is None, "dimension bound fired on the vacuum label"
        return CongruenceVerdict(CONGRUENCE, VACUUM, base)

    if cert is not None:
        return CongruenceVerdict(NONCONGRUENCE, NW_DIMENSION_BOUND, base)
    if ppc:
        details = dict(base)
        details.update(ppc.trace)
        return CongruenceVerdict(NONCONGRUENCE, PRIME_POWER_BOUND, details)
    if bpc:
        details = dict(base)
        details["case"] = bpc_case
        return CongruenceVerdict(NONCONGRUENCE, BOUNDARY_PRIME_POWER, details)
    if dpc:
        return CongruenceVerdict(NONCONGRUENCE, DISTINCT_PRIMES, base)
    return CongruenceVerdict(UNKNOWN, NO_CRITERION, base)
