"""Multivariate polynomials over Q, Buchberger's algorithm, and the finite
quotient algebras that turn zero-dimensional ideals into commuting matrix
actions.

Everything is exact and desk-scale: a handful of variables, reduced Groebner
bases over Q, staircase monomial bases, and multiplication matrices whose
characteristic polynomials and determinants carry the arithmetic content.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .arith import prime_factors
from .matrices import Matrix, charpoly, kernel_q
from .polynomials import Poly, cyclotomic, cyclotomic_indices, format_poly, _scalar

DEGREVLEX = "degrevlex"
LEX = "lex"
ORDERS = (DEGREVLEX, LEX)


def order_key(order: str):
    if order == LEX:
        return lambda e: e
    if order == DEGREVLEX:
        return lambda e: (sum(e), tuple(-x for x in reversed(e)))
    raise ValueError(f"unsupported monomial order {order!r}")


class MPoly:
    """Sparse multivariate polynomial: exponent tuple -> nonzero coefficient."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        clean = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise ValueError("bad exponent vector")
            c = _scalar(coeff if isinstance(coeff, (int, Fraction)) else Fraction(coeff))
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if not clean[exp]:
                    del clean[exp]
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    @classmethod
    def constant(cls, nvars: int, c) -> "MPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "MPoly":
        exp = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(nvars, {exp: 1})

    @classmethod
    def monomial(cls, nvars: int, exp, coeff=1) -> "MPoly":
        return cls(nvars, {tuple(exp): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def __add__(self, other: "MPoly") -> "MPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MPoly(self.nvars, out)

    def __sub__(self, other: "MPoly") -> "MPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) - c
        return MPoly(self.nvars, out)

    def __neg__(self) -> "MPoly":
        return MPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        out: dict = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                out[key] = out.get(key, 0) + ca * cb
        return MPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MPoly":
        if k < 0:
            raise ValueError("negative power")
        out = MPoly.constant(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def leading(self, key) -> tuple[tuple, Fraction | int]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=key)
        return exp, self.terms[exp]

    def monic(self, key) -> "MPoly":
        _, lc = self.leading(key)
        return self * (Fraction(1) / Fraction(lc))

    def __eq__(self, other):
        return isinstance(other, MPoly) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, tuple(sorted(self.terms.items()))))

    def format(self, names) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda t: (-sum(t), tuple(-x for x in t))):
            c = self.terms[e]
            body = "*".join(
                f"{names[i]}^{k}" if k > 1 else names[i] for i, k in enumerate(e) if k
            )
            mag = abs(c)
            if not body:
                piece = str(mag)
            elif mag == 1:
                piece = body
            else:
                piece = f"{mag}*{body}"
            parts.append(("-" if c < 0 else "+", piece))
        sign, piece = parts[0]
        text = ("-" if sign == "-" else "") + piece
        for sign, piece in parts[1:]:
            text += f" {sign} {piece}"
        return text

    def __repr__(self):
        names = [f"u{i+1}" for i in range(self.nvars)]
        return f"MPoly({self.format(names)})"


def mpoly_to_poly(f: MPoly) -> Poly:
    """Collapse a univariate MPoly to a dense Poly."""
    if f.nvars != 1:
        raise ValueError("univariate polynomial required")
    coeffs = [0] * (f.total_degree() + 1 if not f.is_zero() else 0)
    for (e,), c in f.terms.items():
        coeffs[e] = c
    return Poly(coeffs)


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------


class PolyParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


def parse_poly(text: str, names) -> MPoly:
    """Parse '+', '-', '*', '^', parentheses, integer/rational literals and
    the given variable names into an exact MPoly.  Unknown names and syntax
    errors carry the offending offset.
    """
    names = list(names)
    return _Parser(text.replace("−", "-"), names).parse()


class _Parser:
    def __init__(self, text: str, names):
        self.text = text
        self.names = names
        self.nvars = len(names)
        self.pos = 0

    def parse(self) -> MPoly:
        out = self._expr()
        self._skip_ws()
        if self.pos != len(self.text):
            raise PolyParseError("unexpected input", self.pos)
        return out

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self):
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _expr(self) -> MPoly:
        out = self._term()
        while True:
            ch = self._peek()
            if ch == "+":
                self.pos += 1
                out = out + self._term()
            elif ch == "-":
                self.pos += 1
                out = out - self._term()
            else:
                return out

    def _term(self) -> MPoly:
        out = self._factor()
        while self._peek() == "*":
            self.pos += 1
            out = out * self._factor()
        return out

    def _factor(self) -> MPoly:
        ch = self._peek()
        sign = 1
        while ch and ch in "+-":
            if ch == "-":
                sign = -sign
            self.pos += 1
            ch = self._peek()
        base = self._atom()
        if self._peek() == "^":
            self.pos += 1
            exp = self._integer("exponent expected")
            if exp < 0:
                raise PolyParseError("negative exponent", self.pos)
            base = base**exp
        return base if sign == 1 else -base

    def _atom(self) -> MPoly:
        self._skip_ws()
        if self.pos >= len(self.text):
            raise PolyParseError("unexpected end of input", self.pos)
        ch = self.text[self.pos]
        if ch == "(":
            self.pos += 1
            out = self._expr()
            if self._peek() != ")":
                raise PolyParseError("missing closing parenthesis", self.pos)
            self.pos += 1
            return out
        if ch.isdigit():
            num = self._integer("number expected")
            if self._peek() == "/":
                self.pos += 1
                den = self._integer("denominator expected")
                if den == 0:
                    raise PolyParseError("zero denominator", self.pos)
                return MPoly.constant(self.nvars, Fraction(num, den))
            return MPoly.constant(self.nvars, num)
        if ch.isalpha() or ch == "_":
            start = self.pos
            while self.pos < len(self.text) and (
                self.text[self.pos].isalnum() or self.text[self.pos] == "_"
            ):
                self.pos += 1
            name = self.text[start : self.pos]
            if name not in self.names:
                raise PolyParseError(f"unknown variable {name!r}", start)
            return MPoly.variable(self.nvars, self.names.index(name))
        raise PolyParseError(f"unexpected character {ch!r}", self.pos)

    def _integer(self, message: str) -> int:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise PolyParseError(message, self.pos)
        return int(self.text[start : self.pos])


# ---------------------------------------------------------------------------
# Groebner bases
# ---------------------------------------------------------------------------


def _divides(ea, eb) -> bool:
    return all(x <= y for x, y in zip(ea, eb))


def _exp_sub(ea, eb):
    return tuple(x - y for x, y in zip(ea, eb))


def _exp_lcm(ea, eb):
    return tuple(max(x, y) for x, y in zip(ea, eb))


def normal_form(f: MPoly, basis, key) -> MPoly:
    """Remainder of multivariate division of f by the basis."""
    rem: dict = {}
    work = f
    leads = [(g.leading(key)[0], g.leading(key)[1], g) for g in basis if not g.is_zero()]
    while not work.is_zero():
        exp, coeff = work.leading(key)
        hit = next((t for t in leads if _divides(t[0], exp)), None)
        if hit is None:
            rem[exp] = rem.get(exp, 0) + coeff
            work = work - MPoly.monomial(work.nvars, exp, coeff)
        else:
            lexp, lc, g = hit
            factor = MPoly.monomial(work.nvars, _exp_sub(exp, lexp), Fraction(coeff) / Fraction(lc))
            work = work - factor * g
    return MPoly(f.nvars, rem)


def s_polynomial(f: MPoly, g: MPoly, key) -> MPoly:
    ef, cf = f.leading(key)
    eg, cg = g.leading(key)
    lcm = _exp_lcm(ef, eg)
    mf = MPoly.monomial(f.nvars, _exp_sub(lcm, ef), Fraction(1) / Fraction(cf))
    mg = MPoly.monomial(g.nvars, _exp_sub(lcm, eg), Fraction(1) / Fraction(cg))
    return mf * f - mg * g


def buchberger(gens, order: str = DEGREVLEX) -> list[MPoly]:
    """Reduced Groebner basis by Buchberger's algorithm.

    Pairs are processed smallest-lcm first (normal selection); the coprime
    leading-term criterion and the chain criterion prune the queue.  The
    result is the canonical reduced, monic, autoreduced basis for the order.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    key = order_key(order)
    basis = [g.monic(key) for g in gens]
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}

    def lead(i):
        return basis[i].leading(key)[0]

    while pairs:
        i, j = min(pairs, key=lambda p: key(_exp_lcm(lead(p[0]), lead(p[1]))))
        pairs.discard((i, j))
        li, lj = lead(i), lead(j)
        lcm = _exp_lcm(li, lj)
        if lcm == tuple(x + y for x, y in zip(li, lj)):
            continue  # coprime leading terms
        if any(
            k != i and k != j
            and _divides(lead(k), lcm)
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            for k in range(len(basis))
        ):
            continue  # chain criterion
        rem = normal_form(s_polynomial(basis[i], basis[j], key), basis, key)
        if rem.is_zero():
            continue
        basis.append(rem.monic(key))
        new = len(basis) - 1
        pairs.update((k, new) for k in range(new))
    return _autoreduce(basis, key)


def _autoreduce(basis, key):
    # Drop members whose leading term another one divides, then fully reduce tails.
    kept = []
    for i, g in enumerate(basis):
        lg = g.leading(key)[0]
        if any(
            j != i and _divides(basis[j].leading(key)[0], lg) and (j < i or basis[j].leading(key)[0] != lg)
            for j in range(len(basis))
        ):
            continue
        kept.append(g)
    reduced = []
    for i, g in enumerate(kept):
        others = kept[:i] + kept[i + 1 :]
        r = normal_form(g, others, key) if others else g
        if not r.is_zero():
            reduced.append(r.monic(key))
    reduced.sort(key=lambda g: key(g.leading(key)[0]))
    return reduced


def is_zero_dimensional(gb, nvars: int, order: str = DEGREVLEX) -> bool:
    """Staircase criterion: every variable has a pure power among the
    leading terms."""
    key = order_key(order)
    leads = [g.leading(key)[0] for g in gb]
    for i in range(nvars):
        if not any(e[i] > 0 and all(e[j] == 0 for j in range(nvars) if j != i) for e in leads):
            return False
    return True


# ---------------------------------------------------------------------------
# Quotient algebra
# ---------------------------------------------------------------------------


@dataclass
class QuotientAlgebra:
    """Q[u_1..u_d]/I for zero-dimensional I: staircase monomial basis and the
    commuting multiplication matrices of the variables."""

    nvars: int
    order: str
    groebner_basis: list[MPoly]
    basis: list[tuple]
    var_matrices: tuple[Matrix, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def normal_form(self, f: MPoly) -> MPoly:
        return normal_form(f, self.groebner_basis, order_key(self.order))

    def coords(self, f: MPoly) -> tuple:
        nf = self.normal_form(f)
        index = {e: i for i, e in enumerate(self.basis)}
        vec = [0] * len(self.basis)
        for e, c in nf.terms.items():
            vec[index[e]] = c
        return tuple(vec)

    def mult_matrix(self, f: MPoly) -> Matrix:
        """Multiplication-by-f matrix, assembled by substituting the variable
        matrices into f (they commute, so any evaluation order agrees)."""
        n = self.dimension
        out = Matrix.zero(n)
        for exp, coeff in f.terms.items():
            term = Matrix.identity(n)
            for i, e in enumerate(exp):
                if e:
                    term = term * (self.var_matrices[i] ** e)
            out = out + term * coeff
        return out

    def char_poly_and_norm(self, f: MPoly) -> tuple[Poly, int | Fraction]:
        tf = self.mult_matrix(f)
        return charpoly(tf), abs(tf.det())


def quotient_algebra(gb, nvars: int, order: str = DEGREVLEX) -> QuotientAlgebra:
    key = order_key(order)
    if not is_zero_dimensional(gb, nvars, order):
        raise ValueError("ideal is not zero-dimensional")
    leads = [g.leading(key)[0] for g in gb]
    bounds = []
    for i in range(nvars):
        pure = min(
            e[i]
            for e in leads
            if e[i] > 0 and all(e[j] == 0 for j in range(nvars) if j != i)
        )
        bounds.append(pure)
    staircase = [
        exp
        for exp in itertools.product(*(range(b) for b in bounds))
        if not any(_divides(le, exp) for le in leads)
    ]
    staircase.sort(key=key)
    index = {e: i for i, e in enumerate(staircase)}
    mats = []
    for i in range(nvars):
        cols = []
        for e in staircase:
            shifted = MPoly.monomial(nvars, tuple(x + (1 if j == i else 0) for j, x in enumerate(e)))
            nf = normal_form(shifted, list(gb), key)
            col = [0] * len(staircase)
            for ee, c in nf.terms.items():
                col[index[ee]] = c
            cols.append(col)
        mats.append(Matrix([[cols[j][i2] for j in range(len(staircase))] for i2 in range(len(staircase))]))
    return QuotientAlgebra(nvars, order, list(gb), staircase, tuple(mats))


# ---------------------------------------------------------------------------
# Condition battery for zero-dimensional ideal actions
# ---------------------------------------------------------------------------


@dataclass
class IdealConditionsReport:
    zero_dimensional: bool
    variables_nonzero: dict[str, bool]
    a_holds: bool
    variables_injective: dict[str, bool] | None
    b_holds: bool | None
    c_witness: str | None
    c_search_bound: int | None
    c_holds: bool | None
    norms: dict[str, int] | None
    d_witness_primes: dict[str, int] | None
    d_holds: bool | None
    d_note: str | None
    dimension: int | None
    char_polys: dict[str, str] | None

    def to_dict(self) -> dict:
        return {
            "zero_dimensional": self.zero_dimensional,
            "variables_nonzero": self.variables_nonzero,
            "a_holds": self.a_holds,
            "variables_injective": self.variables_injective,
            "b_holds": self.b_holds,
            "c_witness": self.c_witness,
            "c_search_bound": self.c_search_bound,
            "c_holds": self.c_holds,
            "norms": self.norms,
            "d_witness_primes": self.d_witness_primes,
            "d_holds": self.d_holds,
            "d_note": self.d_note,
            "dimension": self.dimension,
            "char_polys": self.char_polys,
        }


def commalg_conditions(
    gens,
    names,
    order: str = DEGREVLEX,
    factor_bound: int = 10**6,
) -> IdealConditionsReport:
    """Check the four hypotheses that make a zero-dimensional ideal action a
    rigidity-ready system.

    (a) finite quotient and no variable lies in the ideal; (b) every variable
    acts injectively (nonzero determinant); (c) some monomial f has id - f
    injective, searched by total degree; (d) each variable's norm has a prime
    the others miss.  Condition (d) may come back inconclusive when a norm
    resists trial division.
    """
    names = list(names)
    nvars = len(names)
    gb = buchberger(gens, order)
    key = order_key(order)
    zero_dim = is_zero_dimensional(gb, nvars, order)
    nonzero = {}
    for i, name in enumerate(names):
        nf = normal_form(MPoly.variable(nvars, i), gb, key)
        nonzero[name] = not nf.is_zero()
    a_holds = zero_dim and all(nonzero.values())
    if not zero_dim:
        return IdealConditionsReport(
            False, nonzero, a_holds, None, None, None, None, None, None, None, None, None, None, None
        )
    qa = quotient_algebra(gb, nvars, order)
    injective = {}
    norms = {}
    chis = {}
    for i, name in enumerate(names):
        chi, norm = qa.char_poly_and_norm(MPoly.variable(nvars, i))
        injective[name] = norm != 0
        norms[name] = int(norm)
        chis[name] = format_poly(chi)
    b_holds = all(injective.values())
    bound = 2 * qa.dimension
    c_witness = None
    ident = Matrix.identity(qa.dimension)
    for total in range(1, bound + 1):
        for exp in itertools.product(range(total + 1), repeat=nvars):
            if sum(exp) != total:
                continue
            f = MPoly.monomial(nvars, exp)
            if (ident - qa.mult_matrix(f)).det() != 0:
                c_witness = f.format(names)
                break
        if c_witness:
            break
    c_holds = c_witness is not None
    d_witness: dict[str, int] = {}
    d_note = None
    d_holds: bool | None = True
    factored = {}
    for name in names:
        factors, rest = prime_factors(norms[name], bound=factor_bound) if norms[name] else ({}, 0)
        if norms[name] == 0:
            factored[name] = {}
            continue
        if rest != 1:
            d_holds = None
            d_note = f"unfactored norm: N({name}) = {norms[name]} resists trial division"
            break
        factored[name] = factors
    if d_holds is not None:
        for name in names:
            others = [factored[o] for o in names if o != name]
            witness = next(
                (p for p in sorted(factored[name]) if all(p not in f for f in others)),
                None,
            )
            if witness is None:
                d_holds = False
                d_witness = {}
                d_note = f"no exclusive prime for {name}"
                break
            d_witness[name] = witness
    return IdealConditionsReport(
        True,
        nonzero,
        a_holds,
        injective,
        b_holds,
        c_witness,
        bound,
        c_holds,
        norms,
        d_witness or None,
        d_holds,
        d_note,
        qa.dimension,
        chis,
    )


# ---------------------------------------------------------------------------
# Principal (single-variable) actions
# ---------------------------------------------------------------------------


@dataclass
class PrincipalReport:
    poly: str
    non_constant: bool
    monic: bool
    constant_term: int
    non_automorphic: bool  # |f(0)| > 1
    mixing_f1_nonzero: bool  # f(1) != 0
    cyclotomic_divisor: int | None
    verdict: str  # "exact" | "not_exact"
    basis: str
    caveat: str | None

    @property
    def exact(self) -> bool:
        return self.verdict == "exact"

    def to_dict(self) -> dict:
        return {
            "poly": self.poly,
            "non_constant": self.non_constant,
            "monic": self.monic,
            "constant_term": self.constant_term,
            "non_automorphic": self.non_automorphic,
            "mixing_f1_nonzero": self.mixing_f1_nonzero,
            "cyclotomic_divisor": self.cyclotomic_divisor,
            "verdict": self.verdict,
            "basis": self.basis,
            "caveat": self.caveat,
        }


_PRINCIPAL_CAVEAT = (
    "an 'exact' verdict additionally assumes no degree>=2 factor with constant "
    "term ±1 beyond the tested cyclotomics; a full factor search is out of scope"
)


def principal_exactness(f: Poly) -> PrincipalReport:
    """Exactness verdict for the shift action on Z[u]/(f), f monic.

    A factor with unit constant term makes the shift invertible on a full
    sublattice, which kills exactness; cyclotomic factors and a unit constant
    term of f itself are the detectable cases.  The standing checks of the
    principal example class (monic, non-constant, |f(0)| > 1, f(1) != 0) are
    reported alongside.
    """
    if not f.is_monic() or not f.is_integral():
        raise ValueError("monic integer polynomial required")
    non_constant = f.degree >= 1
    c0 = int(f[0]) if non_constant else 0
    cyc = next(
        (k for k in cyclotomic_indices(max(f.degree, 1)) if cyclotomic(k).divides(f)),
        None,
    )
    if not non_constant:
        raise ValueError("non-constant polynomial required")
    if abs(c0) <= 1:
        verdict, basis, caveat = (
            "not_exact",
            "the constant term is a unit, so the shift is an automorphism and the family is trivial",
            None,
        )
    elif cyc is not None:
        verdict, basis, caveat = (
            "not_exact",
            f"cyclotomic factor of order {cyc} is a unit-constant divisor",
            None,
        )
    else:
        verdict, basis, caveat = "exact", "no unit-constant divisor detected", _PRINCIPAL_CAVEAT
    return PrincipalReport(
        format_poly(f),
        non_constant,
        True,
        c0,
        abs(c0) > 1,
        f(1) != 0,
        cyc,
        verdict,
        basis,
        caveat,
    )


def kernel_of_one_minus(qa: QuotientAlgebra, f: MPoly) -> int:
    """dim ker(1 - T_f): zero exactly when multiplication by 1 - f is
    injective on the quotient."""
    return len(kernel_q(Matrix.identity(qa.dimension) - qa.mult_matrix(f)))
