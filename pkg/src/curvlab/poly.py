"""Multivariate polynomials over F_p.

A monomial is a tuple of exponents; a polynomial is a dict mapping
monomials to nonzero coefficients in [1, p).  Monomial orders are sort
keys ("bigger key" = "bigger monomial"), so leading terms come from
``max``.  On top of that sit Buchberger's algorithm, normal forms, and
the monomial-ideal combinatorics needed to enumerate standard monomials
and read off Krull dimension.
"""

from __future__ import annotations

import itertools
import re

from .errors import GuardExceeded, ParseError

Monomial = tuple
Polynomial = dict


# ---------------------------------------------------------------------------
# monomials and orders

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when a | b, i.e. every exponent of a is at most b's."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


def grevlex_key(m: Monomial):
    return (sum(m), tuple(-e for e in reversed(m)))


def lex_key(m: Monomial):
    return tuple(m)


ORDER_KEYS = {"grevlex": grevlex_key, "lex": lex_key}


def order_key(name: str):
    try:
        return ORDER_KEYS[name]
    except KeyError:
        raise ParseError(f"unknown monomial order {name!r}") from None


# ---------------------------------------------------------------------------
# polynomial arithmetic

def poly_add(f: Polynomial, g: Polynomial, p: int) -> Polynomial:
    h = dict(f)
    for m, c in g.items():
        nc = (h.get(m, 0) + c) % p
        if nc:
            h[m] = nc
        else:
            h.pop(m, None)
    return h


def poly_scale(f: Polynomial, c: int, p: int) -> Polynomial:
    c %= p
    if c == 0:
        return {}
    return {m: (a * c) % p for m, a in f.items()}


def poly_sub(f: Polynomial, g: Polynomial, p: int) -> Polynomial:
    return poly_add(f, poly_scale(g, p - 1, p), p)


def term_mul(f: Polynomial, mono: Monomial, coeff: int, p: int) -> Polynomial:
    coeff %= p
    if coeff == 0:
        return {}
    return {mono_mul(m, mono): (a * coeff) % p for m, a in f.items()}


def poly_mul(f: Polynomial, g: Polynomial, p: int) -> Polynomial:
    h: Polynomial = {}
    for m, c in g.items():
        h = poly_add(h, term_mul(f, m, c, p), p)
    return h


def poly_degree(f: Polynomial) -> int:
    """Total degree; -1 for the zero polynomial."""
    return max((mono_degree(m) for m in f), default=-1)


def leading_monomial(f: Polynomial, key) -> Monomial:
    return max(f, key=key)


def make_monic(f: Polynomial, p: int, key) -> Polynomial:
    lc = f[leading_monomial(f, key)]
    return poly_scale(f, pow(lc, -1, p), p)


def substitute(f: Polynomial, images: list[Polynomial], p: int) -> Polynomial:
    """Substitute variable i by images[i] (a polynomial in the new ring)."""
    nnew = 0
    for g in images:
        for m in g:
            nnew = max(nnew, len(m))
    out: Polynomial = {}
    one = {(0,) * nnew: 1}
    for m, c in f.items():
        term = dict(one)
        for i, e in enumerate(m):
            for _ in range(e):
                term = poly_mul(term, images[i], p)
        out = poly_add(out, poly_scale(term, c, p), p)
    return out


# ---------------------------------------------------------------------------
# normal forms and Buchberger

def normal_form(f: Polynomial, basis: list[Polynomial], p: int, key) -> Polynomial:
    """Fully reduced remainder of f modulo a list of monic polynomials."""
    lms = [leading_monomial(g, key) for g in basis]
    rem: Polynomial = {}
    work = dict(f)
    while work:
        m = leading_monomial(work, key)
        c = work[m]
        for g, lm in zip(basis, lms):
            if mono_divides(lm, m):
                work = poly_sub(work, term_mul(g, mono_div(m, lm), c, p), p)
                break
        else:
            rem[m] = c
            del work[m]
    return rem


def s_polynomial(f: Polynomial, g: Polynomial, p: int, key) -> Polynomial:
    """S-polynomial of two monic polynomials."""
    lf, lg = leading_monomial(f, key), leading_monomial(g, key)
    lcm = mono_lcm(lf, lg)
    return poly_sub(term_mul(f, mono_div(lcm, lf), 1, p),
                    term_mul(g, mono_div(lcm, lg), 1, p), p)


def interreduce(basis: list[Polynomial], p: int, key) -> list[Polynomial]:
    """Reduce each element against the others; monic, sorted, no zeros."""
    basis = [make_monic(g, p, key) for g in basis if g]
    changed = True
    while changed:
        changed = False
        for i in range(len(basis)):
            others = basis[:i] + basis[i + 1:]
            r = normal_form(basis[i], others, p, key) if others else basis[i]
            if r != basis[i]:
                changed = True
                if r:
                    basis[i] = make_monic(r, p, key)
                else:
                    basis = others
                    break
    basis.sort(key=lambda g: key(leading_monomial(g, key)))
    return basis


def buchberger(gens: list[Polynomial], p: int, key,
               degree_guard: int = 32) -> list[Polynomial]:
    """Reduced Groebner basis via Buchberger with the normal strategy.

    Pairs are processed in order of increasing lcm degree, with the
    coprimality and chain criteria.  Raises GuardExceeded as soon as a
    pair lcm or a new basis element tops degree_guard — the signal that
    the input is (close to) non-artinian and would blow up.
    """
    G = interreduce([dict(g) for g in gens if g], p, key)
    if not G:
        return []
    lms = [leading_monomial(g, key) for g in G]
    pairs = {(i, j) for j in range(len(G)) for i in range(j)}
    done: set[tuple[int, int]] = set()

    def lcm_of(i, j):
        return mono_lcm(lms[i], lms[j])

    while pairs:
        i, j = min(pairs, key=lambda ij: (mono_degree(lcm_of(*ij)),
                                          key(lcm_of(*ij)), ij))
        pairs.discard((i, j))
        done.add((i, j))
        lcm = lcm_of(i, j)
        if mono_degree(lcm) > degree_guard:
            raise GuardExceeded(
                f"S-pair lcm degree {mono_degree(lcm)} exceeds guard {degree_guard}")
        # coprimality criterion
        if lcm == mono_mul(lms[i], lms[j]):
            continue
        # chain criterion
        skip = False
        for t in range(len(G)):
            if t in (i, j) or not mono_divides(lms[t], lcm):
                continue
            a, b = (min(i, t), max(i, t)), (min(j, t), max(j, t))
            if a in done and b in done:
                skip = True
                break
        if skip:
            continue
        r = normal_form(s_polynomial(G[i], G[j], p, key), G, p, key)
        if r:
            if poly_degree(r) > degree_guard:
                raise GuardExceeded(
                    f"basis element degree {poly_degree(r)} exceeds guard {degree_guard}")
            G.append(make_monic(r, p, key))
            lms.append(leading_monomial(G[-1], key))
            t = len(G) - 1
            pairs.update((i2, t) for i2 in range(t))
    return interreduce(G, p, key)


# ---------------------------------------------------------------------------
# monomial-ideal combinatorics

def standard_monomials(lead_monos: list[Monomial], nvars: int,
                       degree_cap: int | None = None) -> list[Monomial]:
    """Monomials not divisible by any leading monomial, sorted by grevlex.

    With no cap the enumeration requires the quotient to be artinian
    (finitely many standard monomials); the caller is responsible for
    checking monomial_ideal_dimension first.
    """
    start = (0,) * nvars
    seen = {start}
    out = []
    queue = [start]
    while queue:
        m = queue.pop()
        if any(mono_divides(lt, m) for lt in lead_monos):
            continue
        out.append(m)
        if degree_cap is not None and mono_degree(m) >= degree_cap:
            continue
        for i in range(nvars):
            nm = m[:i] + (m[i] + 1,) + m[i + 1:]
            if nm not in seen:
                seen.add(nm)
                queue.append(nm)
    out.sort(key=grevlex_key)
    return out


def monomial_ideal_dimension(lead_monos: list[Monomial], nvars: int) -> int:
    """Krull dimension of k[x]/(leading monomials).

    n minus the minimum size of a variable subset meeting the support of
    every generator (n is small here, so brute force over subsets).
    """
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in lead_monos]
    if any(not s for s in supports):
        return -1  # a unit generator: the zero ring
    supports = sorted(set(supports), key=len)
    for size in range(nvars + 1):
        for subset in itertools.combinations(range(nvars), size):
            chosen = set(subset)
            if all(s & chosen for s in supports):
                return nvars - size
    return 0


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\d+|[A-Za-z_][A-Za-z_0-9]*|[\^*+\-()]|\s+|.")


def _split_vars(name: str, var_names: list[str]) -> list[str] | None:
    """Split a juxtaposed identifier like 'ab' into declared variables."""
    if not name:
        return []
    for v in sorted(var_names, key=len, reverse=True):
        if name.startswith(v):
            rest = _split_vars(name[len(v):], var_names)
            if rest is not None:
                return [v] + rest
    return None


def parse_polynomial(text: str, var_names: list[str], p: int) -> Polynomial:
    """Parse the CLI polynomial grammar into a dict polynomial.

    poly := term (('+'|'-') term)*
    term := [coeff]['*']? (var('^'int)? ('*'? var('^'int)?)*)
    """
    n = len(var_names)
    var_index = {v: i for i, v in enumerate(var_names)}
    tokens = []
    for tok in _TOKEN.findall(text):
        if tok.isspace():
            continue
        if tok in "()":
            raise ParseError(f"parentheses not supported in {text!r}")
        if tok in "^*+-" or tok.isdigit() or re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", tok):
            tokens.append(tok)
        else:
            raise ParseError(f"bad character {tok!r} in {text!r}")
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def parse_term() -> tuple[int, Monomial]:
        nonlocal pos
        coeff = 1
        expo = [0] * n
        saw_factor = False
        expect_factor = True
        while True:
            tok = peek()
            if tok is None or tok in "+-":
                break
            if tok == "*":
                take()
                expect_factor = True
                continue
            if tok == "^":
                raise ParseError(f"stray '^' in {text!r}")
            take()
            saw_factor = True
            expect_factor = False
            if tok.isdigit():
                coeff = (coeff * int(tok)) % p
                continue
            parts = _split_vars(tok, var_names)
            if parts is None:
                raise ParseError(f"unknown variable {tok!r} in {text!r}")
            for v in parts[:-1]:
                expo[var_index[v]] += 1
            last = parts[-1]
            e = 1
            if peek() == "^":
                take()
                nxt = peek()
                if nxt is None or not nxt.isdigit():
                    raise ParseError(f"'^' needs an integer exponent in {text!r}")
                e = int(take())
            expo[var_index[last]] += e
        if not saw_factor or expect_factor:
            raise ParseError(f"empty term in {text!r}")
        return coeff, tuple(expo)

    result: Polynomial = {}
    sign = 1
    tok = peek()
    if tok in ("+", "-"):
        sign = -1 if take() == "-" else 1
    if peek() is None:
        raise ParseError(f"empty polynomial {text!r}")
    while True:
        coeff, mono = parse_term()
        result = poly_add(result, {mono: (sign * coeff) % p} if (sign * coeff) % p else {}, p)
        tok = peek()
        if tok is None:
            break
        sign = -1 if take() == "-" else 1
        if tok not in ("+", "-"):
            raise ParseError(f"expected '+' or '-' at {tok!r} in {text!r}")
    return result


def format_polynomial(f: Polynomial, var_names: list[str], key=grevlex_key) -> str:
    if not f:
        return "0"
    parts = []
    for m in sorted(f, key=key, reverse=True):
        c = f[m]
        factors = [] if c != 1 or not any(m) else []
        if c != 1 or not any(m):
            factors.append(str(c))
        for v, e in zip(var_names, m):
            if e == 1:
                factors.append(v)
            elif e > 1:
                factors.append(f"{v}^{e}")
        parts.append("*".join(factors))
    return " + ".join(parts)
