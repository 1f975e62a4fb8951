"""Buchberger completion for homogeneous ideals and submodules of free S-modules.

Everything is graded.  A free module ``F = S(-s_0) + ... + S(-s_{r-1})`` fixes
the degree of a term ``m e_i`` as ``deg m + s_i``.  Terms are ordered
term-over-position: by degree, then grevlex on the monomial (x > y > z), and
on ties the smaller position index is larger.  An optional leading block of
positions can be made to dominate every other position; that elimination
order is what turns syzygy and colon computations into one completion.

Internally a term is packed into a single integer whose natural order is the
term order and for which multiplying by a monomial is integer addition.  A
vector is a ``dict`` from packed term to ``mpq`` coefficient.
"""

import heapq
from itertools import combinations

from gmpy2 import mpq

from .poly import Poly, monomials_of_degree

_W = 1 << 10          # width of one packed field
_MAXE = _W - 1        # largest exponent / position that fits a field
_OFF = 256            # degree offset so negative shifts still pack
_W2 = _W * _W
_W3 = _W2 * _W
_W4 = _W3 * _W


class FreeModule:
    """Graded free module with ``shifts`` and ``elim`` dominating positions."""

    __slots__ = ("shifts", "elim")

    def __init__(self, shifts, elim=0):
        self.shifts = tuple(int(s) for s in shifts)
        self.elim = int(elim)
        if len(self.shifts) > _MAXE:
            raise ValueError("free module rank too large")

    @property
    def rank(self):
        return len(self.shifts)

    def __eq__(self, other):
        return isinstance(other, FreeModule) and (self.shifts, self.elim) == (other.shifts, other.elim)

    def __hash__(self):
        return hash((self.shifts, self.elim))

    def __repr__(self):
        return f"FreeModule(shifts={self.shifts}, elim={self.elim})"

    def encode(self, mono, pos):
        a, b, c = mono
        deg = a + b + c + self.shifts[pos] + _OFF
        blk = 1 if pos < self.elim else 0
        return blk * _W4 + deg * _W3 + (_MAXE - c) * _W2 + (_MAXE - b) * _W + (_MAXE - pos)

    def decode(self, code):
        """Packed term -> ``(pos, (a, b, c))``."""
        pos = _MAXE - code % _W
        code //= _W
        b = _MAXE - code % _W
        code //= _W
        c = _MAXE - code % _W
        deg = (code // _W) % _W - _OFF
        return pos, (deg - self.shifts[pos] - b - c, b, c)


def _shift_code(mono):
    # packed-code increment for multiplying a term by ``mono``
    a, b, c = mono
    return (a + b + c) * _W3 - c * _W2 - b * _W


def _code_degree(code):
    return (code // _W3) % _W - _OFF


class ModVec:
    """A vector of polynomials in a graded free module."""

    __slots__ = ("components", "shifts")

    def __init__(self, components, shifts=None):
        comps = tuple(c if isinstance(c, Poly) else Poly.const(c) for c in components)
        if shifts is None:
            shifts = (0,) * len(comps)
        shifts = tuple(shifts)
        if len(shifts) != len(comps):
            raise ValueError("shifts and components differ in length")
        self.components = comps
        self.shifts = shifts

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def is_zero(self):
        return all(c.is_zero() for c in self.components)

    @property
    def degree(self):
        """Common value of ``deg(component) + shift``; ``None`` for zero."""
        degs = set()
        for c, s in zip(self.components, self.shifts):
            for m in c.terms:
                degs.add(sum(m) + s)
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError("vector is not homogeneous")
        return degs.pop()

    def is_homogeneous(self):
        try:
            self.degree
        except ValueError:
            return False
        return True

    def __eq__(self, other):
        return isinstance(other, ModVec) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __add__(self, other):
        return ModVec([a + b for a, b in zip(self.components, other.components)], self.shifts)

    def __sub__(self, other):
        return ModVec([a - b for a, b in zip(self.components, other.components)], self.shifts)

    def __neg__(self):
        return ModVec([-a for a in self.components], self.shifts)

    def __mul__(self, h):
        return ModVec([h * a for a in self.components], self.shifts)

    __rmul__ = __mul__

    def dot(self, polys):
        """``sum_i components[i] * polys[i]``."""
        total = Poly()
        for a, p in zip(self.components, polys):
            total = total + a * p
        return total

    def with_shifts(self, shifts):
        return ModVec(self.components, shifts)

    def __repr__(self):
        return "ModVec(" + ", ".join(str(c) for c in self.components) + ")"


def combine(coeffs, vectors):
    """``sum_j coeffs[j] * vectors[j]`` for ModVecs (or Polys)."""
    if vectors and isinstance(vectors[0], Poly):
        total = Poly()
        for c, v in zip(coeffs, vectors):
            total = total + c * v
        return total
    shifts = vectors[0].shifts
    comps = [Poly()] * len(vectors[0])
    for c, v in zip(coeffs, vectors):
        if c.is_zero():
            continue
        comps = [a + c * b for a, b in zip(comps, v.components)]
    return ModVec(comps, shifts)


def _vec_to_dict(module, vec):
    out = {}
    for pos, comp in enumerate(vec.components):
        for mono, c in comp.items():
            out[module.encode(mono, pos)] = c
    return out


def _dict_to_vec(module, d, shifts=None, offset=0):
    parts = [dict() for _ in range(module.rank - offset)]
    for code, c in d.items():
        pos, mono = module.decode(code)
        parts[pos - offset][mono] = c
    return ModVec([Poly._raw(p) for p in parts], shifts if shifts is not None else module.shifts[offset:])


class _Elem:
    __slots__ = ("lt", "pos", "exps", "deg", "vec", "active")

    def __init__(self, module, vec):
        lt = max(vec)
        lc = vec[lt]
        if lc != 1:
            inv = 1 / lc
            vec = {k: v * inv for k, v in vec.items()}
        self.lt = lt
        self.pos, self.exps = module.decode(lt)
        self.deg = _code_degree(lt)
        self.vec = vec
        self.active = True


def _lcm(e, f):
    return (max(e[0], f[0]), max(e[1], f[1]), max(e[2], f[2]))


def _divides(e, f):
    return e[0] <= f[0] and e[1] <= f[1] and e[2] <= f[2]


class _Engine:
    """Graded Buchberger state that can be resumed to higher degrees."""

    def __init__(self, module):
        self.module = module
        self.rank_one = module.rank == 1
        self.elems = []
        self.reducers = {}          # pos -> active elements, in insertion order
        self.pairs = []             # heap of (deg, lcm code, i, j)
        self.live = {}              # (i, j) -> lcm exponents
        self.pending = []           # heap of (deg, seq, vec)
        self._seq = 0
        self.done = None            # every item of degree <= done is processed

    # -- reduction -----------------------------------------------------

    def reduce(self, vec, full=True):
        decode = self.module.decode
        reducers = self.reducers
        p = dict(vec)
        r = {}
        while p:
            t = max(p)
            pos, (a, b, c) = decode(t)
            g = None
            for e in reducers.get(pos, ()):
                ea, eb, ec = e.exps
                if ea <= a and eb <= b and ec <= c:
                    g = e
                    break
            if g is None:
                r[t] = p.pop(t)
                if not full:
                    r.update(p)
                    return r
                continue
            coef = p.pop(t)
            delta = t - g.lt
            glt = g.lt
            for tt, cc in g.vec.items():
                if tt == glt:
                    continue
                k = tt + delta
                v = p.get(k)
                if v is None:
                    p[k] = -coef * cc
                else:
                    v = v - coef * cc
                    if v:
                        p[k] = v
                    else:
                        del p[k]
        return r

    # -- bookkeeping ---------------------------------------------------

    def add_generator(self, vec):
        if not vec:
            return
        deg = _code_degree(max(vec))
        if self.done is not None and deg <= self.done:
            # resumed engine: insert right away so earlier degrees stay complete
            r = self.reduce(vec)
            if r:
                self._insert(r)
            return
        heapq.heappush(self.pending, (deg, self._seq, vec))
        self._seq += 1

    def seed(self, vecs):
        """Install vectors already known to form a Groebner basis (no pairs)."""
        for vec in vecs:
            if vec:
                e = _Elem(self.module, vec)
                self.elems.append(e)
                self.reducers.setdefault(e.pos, []).append(e)

    def _insert(self, vec):
        h = _Elem(self.module, vec)
        idx = len(self.elems)
        self.elems.append(h)
        self._update(idx)
        same = self.reducers.setdefault(h.pos, [])
        for g in same:
            if g.active and _divides(h.exps, g.exps):
                g.active = False
        same[:] = [g for g in same if g.active]
        same.append(h)

    def _update(self, hi):
        # Gebauer-Moeller pair update
        h = self.elems[hi]
        he = h.exps
        cands = []
        for gi, g in enumerate(self.elems[:hi]):
            if not g.active or g.pos != h.pos:
                continue
            L = _lcm(g.exps, he)
            coprime = self.rank_one and L == (g.exps[0] + he[0], g.exps[1] + he[1], g.exps[2] + he[2])
            cands.append((L, gi, coprime))

        # drop (g, h) whose lcm is properly divided by another new pair's lcm
        kept = []
        for L, gi, cp in cands:
            if any(L2 != L and _divides(L2, L) for L2, _, _ in cands):
                continue
            kept.append((L, gi, cp))
        # one pair per lcm; none at all if one of them is coprime
        by_lcm = {}
        for L, gi, cp in kept:
            by_lcm.setdefault(L, []).append((gi, cp))
        new_pairs = []
        for L, group in by_lcm.items():
            if any(cp for _, cp in group):
                continue
            new_pairs.append((L, min(gi for gi, _ in group)))

        # prune old pairs made redundant by h
        dead = []
        for key, L in self.live.items():
            i, j = key
            if self.elems[i].pos != h.pos:
                continue
            if _divides(he, L) and _lcm(self.elems[i].exps, he) != L and _lcm(self.elems[j].exps, he) != L:
                dead.append(key)
        for key in dead:
            del self.live[key]

        for L, gi in new_pairs:
            key = (gi, hi)
            self.live[key] = L
            code = self.module.encode(L, h.pos)
            heapq.heappush(self.pairs, (_code_degree(code), code, gi, hi))

    def _spoly(self, i, j, L):
        gi, gj = self.elems[i], self.elems[j]
        code = self.module.encode(L, gi.pos)
        di = code - gi.lt
        dj = code - gj.lt
        out = {k + di: v for k, v in gi.vec.items()}
        for k, v in gj.vec.items():
            k = k + dj
            w = out.get(k)
            if w is None:
                out[k] = -v
            else:
                w = w - v
                if w:
                    out[k] = w
                else:
                    del out[k]
        return out

    def _next_degree(self):
        while self.pairs and (self.pairs[0][2], self.pairs[0][3]) not in self.live:
            heapq.heappop(self.pairs)
        degs = []
        if self.pairs:
            degs.append(self.pairs[0][0])
        if self.pending:
            degs.append(self.pending[0][0])
        return min(degs) if degs else None

    def run(self, max_degree=None):
        """Complete through ``max_degree`` (everything when ``None``)."""
        while True:
            D = self._next_degree()
            if D is None:
                self.done = None if max_degree is None else max_degree
                self._complete = True
                return True
            if max_degree is not None and D > max_degree:
                self.done = max_degree
                self._complete = False
                return False
            while self.pending and self.pending[0][0] == D:
                _, _, vec = heapq.heappop(self.pending)
                r = self.reduce(vec)
                if r:
                    self._insert(r)
            while self.pairs and self.pairs[0][0] == D:
                _, _, i, j = heapq.heappop(self.pairs)
                L = self.live.pop((i, j), None)
                if L is None:
                    continue
                r = self.reduce(self._spoly(i, j, L))
                if r:
                    self._insert(r)

    def is_complete(self):
        return not self.pending and self._next_degree() is None

    def active(self):
        return [e for e in self.elems if e.active]

    def reduced(self):
        """Interreduced monic basis vectors, sorted by (degree, leading term)."""
        out = []
        for e in self.active():
            tail = {k: v for k, v in e.vec.items() if k != e.lt}
            vec = self.reduce(tail)
            vec[e.lt] = mpq(1)
            out.append(vec)
        out.sort(key=lambda v: (_code_degree(max(v)), max(v)))
        return out


class SubmoduleGB:
    """Reduced Groebner basis of a graded submodule of a free module.

    ``degree_bound`` is ``None`` for a complete basis; otherwise the basis is
    only guaranteed through that degree.
    """

    def __init__(self, module, generators, engine, degree_bound=None):
        self.module = module
        self.generators = list(generators)
        self._engine = engine
        self.degree_bound = degree_bound
        self._reduced = None

    @property
    def order(self):
        return "grevlex/term-over-position"

    @property
    def shifts(self):
        return self.module.shifts

    @property
    def complete(self):
        return self.degree_bound is None

    @property
    def reduced_basis(self):
        if self._reduced is None:
            self._reduced = [_dict_to_vec(self.module, v) for v in self._engine.reduced()]
        return list(self._reduced)

    def _basis_dicts(self):
        return self._engine.reduced()

    def leading_terms(self):
        """``(position, exponents)`` of every basis element."""
        return [(e.pos, e.exps) for e in self._engine.active()]

    def _check_degree(self, deg):
        if deg is not None and self.degree_bound is not None and deg > self.degree_bound:
            raise ValueError(f"basis only valid through degree {self.degree_bound}, got {deg}")

    def normal_form(self, v):
        if not isinstance(v, ModVec):
            raise TypeError("expected a ModVec")
        if len(v) != self.module.rank:
            raise ValueError(f"rank mismatch: vector has {len(v)} slots, module has {self.module.rank}")
        self._check_degree(v.degree)
        r = self._engine.reduce(_vec_to_dict(self.module, v))
        return _dict_to_vec(self.module, r)

    def contains(self, v):
        return self.normal_form(v).is_zero()

    def graded_dimension(self, k):
        """dim of the degree-k piece of ``ambient / submodule``."""
        self._check_degree(k)
        return _standard_count(self.module, self.leading_terms(), k)

    def submodule_dimension(self, k):
        """dim of the degree-k piece of the submodule itself."""
        total = sum(_num_monomials(k - s) for s in self.module.shifts)
        return total - self.graded_dimension(k)

    def __len__(self):
        return len(self._engine.active())


class IdealGB:
    """Reduced Groebner basis of a homogeneous ideal of S (grevlex, x > y > z)."""

    def __init__(self, generators, engine, degree_bound=None):
        self.generators = list(generators)
        self._engine = engine
        self.module = engine.module
        self.degree_bound = degree_bound
        self._reduced = None

    order = "grevlex"

    @property
    def complete(self):
        return self.degree_bound is None

    @property
    def reduced_basis(self):
        if self._reduced is None:
            self._reduced = [Poly._raw(_poly_terms(self.module, v)) for v in self._engine.reduced()]
        return list(self._reduced)

    def leading_monomials(self):
        return [e.exps for e in self._engine.active()]

    def is_unit(self):
        return (0, 0, 0) in self.leading_monomials()

    def normal_form(self, p):
        if isinstance(p, ModVec):
            if len(p) != 1:
                raise ValueError(f"rank mismatch: vector has {len(p)} slots, ideal needs 1")
            p = p[0]
        if not isinstance(p, Poly):
            p = Poly.const(p)
        if self.degree_bound is not None and p.degree is not None and p.degree > self.degree_bound:
            raise ValueError(f"basis only valid through degree {self.degree_bound}")
        d = {self.module.encode(m, 0): c for m, c in p.items()}
        return Poly._raw(_poly_terms(self.module, self._engine.reduce(d)))

    def contains(self, p):
        return self.normal_form(p).is_zero()

    def graded_dimension(self, k):
        """dim (S/I)_k."""
        if self.degree_bound is not None and k > self.degree_bound:
            raise ValueError(f"basis only valid through degree {self.degree_bound}")
        return _standard_count(self.module, [(0, m) for m in self.leading_monomials()], k)

    def ideal_dimension(self, k):
        """dim I_k."""
        return _num_monomials(k) - self.graded_dimension(k)

    def hilbert_function(self, kmax):
        return [self.graded_dimension(k) for k in range(kmax + 1)]

    def stable_degree(self):
        """A degree from which the Hilbert function of S/I is polynomial."""
        lms = self.leading_monomials()
        if not lms:
            return 0
        return max(0, sum(max(m[i] for m in lms) for i in range(3)) - 2)

    def degree(self):
        """Degree of the projective scheme V(I) when S/I has Krull dimension <= 1."""
        if not self.complete:
            raise ValueError("degree needs a complete basis")
        dim = krull_dimension(self)
        if dim > 1:
            raise ValueError("degree is only defined here for zero-dimensional schemes")
        return self.graded_dimension(self.stable_degree())

    def __len__(self):
        return len(self._engine.active())

    def __repr__(self):
        return "IdealGB([" + ", ".join(str(p) for p in self.reduced_basis) + "])"


def _poly_terms(module, d):
    decode = module.decode
    return {decode(k)[1]: v for k, v in d.items()}


def _num_monomials(k):
    return (k + 2) * (k + 1) // 2 if k >= 0 else 0


def _standard_count(module, lts, k):
    by_pos = {}
    for pos, e in lts:
        by_pos.setdefault(pos, []).append(e)
    total = 0
    for pos, s in enumerate(module.shifts):
        kk = k - s
        if kk < 0:
            continue
        divs = by_pos.get(pos, [])
        if not divs:
            total += _num_monomials(kk)
            continue
        if (0, 0, 0) in divs:
            continue
        for mono in monomials_of_degree(kk):
            if not any(_divides(e, mono) for e in divs):
                total += 1
    return total


# -- public operations --------------------------------------------------


def _as_vectors(gens):
    gens = list(gens)
    if gens and isinstance(gens[0], ModVec):
        return gens, False
    return [ModVec([g if isinstance(g, Poly) else Poly.const(g)]) for g in gens], True


def ideal(generators, max_degree=None):
    """Reduced Groebner basis of the ideal generated by homogeneous ``generators``."""
    gens = [g if isinstance(g, Poly) else Poly.const(g) for g in generators]
    for g in gens:
        if not g.is_homogeneous():
            raise ValueError(f"generator is not homogeneous: {g}")
    module = FreeModule((0,))
    eng = _Engine(module)
    for g in gens:
        eng.add_generator({module.encode(m, 0): c for m, c in g.items()})
    complete = eng.run(max_degree)
    return IdealGB(gens, eng, None if complete else max_degree)


def submodule(generators, shifts=None, max_degree=None):
    """Reduced Groebner basis of the submodule generated by homogeneous ModVecs."""
    gens = list(generators)
    if shifts is None:
        if not gens:
            raise ValueError("shifts are required for an empty generator list")
        shifts = gens[0].shifts
    module = FreeModule(shifts)
    eng = _Engine(module)
    for v in gens:
        if len(v) != module.rank:
            raise ValueError("rank mismatch among generators")
        v.degree  # raises when inhomogeneous
        eng.add_generator(_vec_to_dict(module, v))
    complete = eng.run(max_degree)
    return SubmoduleGB(module, gens, eng, None if complete else max_degree)


def buchberger(gens, shifts=None, max_degree=None):
    """Groebner basis of polynomials (an ideal) or ModVecs (a submodule)."""
    gens = list(gens)
    if gens and isinstance(gens[0], ModVec):
        return submodule(gens, shifts, max_degree)
    if shifts is not None and len(shifts) != 1:
        return submodule(gens, shifts, max_degree)
    return ideal(gens, max_degree)


def normal_form(v, basis):
    return basis.normal_form(v)


def _vector_degrees(vectors):
    degs = []
    for v in vectors:
        d = v.degree
        degs.append(0 if d is None else d)
    return degs


def syzygies(vectors, max_degree=None):
    """Groebner basis of the syzygy module of ``vectors``.

    Slot ``i`` of the result carries shift ``deg vectors[i]``, so a syzygy's
    degree is the common degree of the relation it encodes.
    """
    vecs, _ = _as_vectors(vectors)
    if not vecs:
        raise ValueError("need at least one vector")
    r = len(vecs[0])
    base = vecs[0].shifts
    degs = _vector_degrees(vecs)
    k = len(vecs)
    aug = FreeModule(tuple(base) + tuple(degs), elim=r)
    eng = _Engine(aug)
    for i, v in enumerate(vecs):
        if len(v) != r:
            raise ValueError("rank mismatch among vectors")
        d = _vec_to_dict(aug, v)
        d[aug.encode((0, 0, 0), r + i)] = mpq(1)
        eng.add_generator(d)
    complete = eng.run(max_degree)
    target = FreeModule(degs)
    syz = []
    for vec in eng.reduced():
        lead_pos = aug.decode(max(vec))[0]
        if lead_pos < r:
            continue
        conv = {}
        for code, c in vec.items():
            pos, mono = aug.decode(code)
            conv[target.encode(mono, pos - r)] = c
        syz.append(conv)
    out = _Engine(target)
    out.seed(syz)
    gens = [_dict_to_vec(target, v) for v in syz]
    bound = None if complete else max_degree
    out.done = bound
    return SubmoduleGB(target, gens, out, bound)


def _quotient(basis_polys, w):
    """``{h : h*w in I^s}`` where ``I`` has reduced basis ``basis_polys``."""
    s = len(w)
    degs = [p.degree for p in w]
    top = max(d for d in degs if d is not None)
    shifts = tuple(top - (d if d is not None else top) for d in degs) + (top,)
    aug = FreeModule(shifts, elim=s)
    eng = _Engine(aug)
    seeds = []
    for pos in range(s):
        for p in basis_polys:
            seeds.append({aug.encode(m, pos): c for m, c in p.items()})
    eng.seed(seeds)
    gen = {}
    for pos, p in enumerate(w):
        for m, c in p.items():
            gen[aug.encode(m, pos)] = c
    gen[aug.encode((0, 0, 0), s)] = mpq(1)
    eng.add_generator(gen)
    # pair seeds with the new generator only; seeds already form a basis
    eng.run()
    out = []
    for vec in eng.reduced():
        if aug.decode(max(vec))[0] < s:
            continue
        out.append(Poly._raw({aug.decode(k)[1]: v for k, v in vec.items()}))
    return out


def ideal_colon(I, g):
    """``I : g`` for a nonzero homogeneous polynomial ``g``."""
    if not isinstance(g, Poly):
        g = Poly.const(g)
    if g.is_zero():
        raise ValueError("colon by the zero polynomial")
    if not I.complete:
        raise ValueError("colon needs a complete basis")
    return ideal(_quotient(I.reduced_basis, [g]))


def ideal_colon_ideal(I, J):
    """``I : J = {h : h J subset I}``; ``J`` is an IdealGB or a list of polys."""
    gens = J.reduced_basis if isinstance(J, IdealGB) else [p if isinstance(p, Poly) else Poly.const(p) for p in J]
    gens = [p for p in gens if not p.is_zero()]
    if not gens:
        raise ValueError("colon by the zero ideal")
    if not I.complete:
        raise ValueError("colon needs a complete basis")
    return ideal(_quotient(I.reduced_basis, gens))


def same_ideal(I, J):
    return all(I.contains(p) for p in J.reduced_basis) and all(J.contains(p) for p in I.reduced_basis)


def saturate_max_ideal(I, max_rounds=None):
    """``I : (x, y, z)^infinity`` by iterating ``I <- I : (x, y, z)``."""
    from .poly import X, Y, Z

    current = I
    rounds = 0
    while True:
        nxt = ideal_colon_ideal(current, [X, Y, Z])
        rounds += 1
        if all(current.contains(p) for p in nxt.reduced_basis):
            return current
        current = nxt
        if max_rounds is not None and rounds >= max_rounds:
            raise RuntimeError("saturation did not stabilize")


def krull_dimension(I):
    """Krull dimension of S/I from the leading-term ideal; -1 for the unit ideal."""
    lms = I.leading_monomials()
    if (0, 0, 0) in lms:
        return -1
    best = 0
    for size in (3, 2, 1):
        for subset in combinations(range(3), size):
            outside = [i for i in range(3) if i not in subset]
            if all(any(m[i] for i in outside) for m in lms):
                return size
    return best


def graded_dimension(gb, k):
    """dim of the degree-k piece of the quotient by ``gb``; 0 for negative k."""
    if k < 0:
        return 0
    return gb.graded_dimension(k)
