"""Pure-Python kernel for the semidirect-product hot loops.

Same API and bit-identical outputs as the compiled twin in ``_ckern``;
this module is the fallback selected when the extension is not built.

Elements of C_l^n : G are dense integers ``V * ng + g`` where ``g`` is the
index of the base element and ``V = sum_i v_i * l^i`` packs the exponent
vector, digit 0 being the first coordinate. Multiplication is

    (V1, g1) * (V2, g2) = (V1 (+) perm(g1, V2), g1 g2)

with (+) digitwise addition mod l and perm(g, -) the coordinate
permutation sending digit i to digit sigma_g(i).
"""

from array import array

__all__ = ["TildeKernel"]


class TildeKernel:
    def __init__(self, l, n, ng, gmul, ginv, sigma):
        self.l = l
        self.n = n
        self.ng = ng
        self.lpow = l**n
        self.size = self.lpow * ng
        self._gmul = array("i", gmul)
        self._ginv = array("i", ginv)

        pw = [l**i for i in range(n + 1)]

        # perm(g, V) for every g and V, built digit by digit
        permv = []
        for g in range(ng):
            sig = sigma[g * n : (g + 1) * n]
            row = [0]
            for i in range(n):
                w = pw[sig[i]]
                row = [d * w + r for d in range(l) for r in row]
            permv.append(array("i", row))
        self._permv = permv

        # digitwise negation
        row = [0]
        for i in range(n):
            w = pw[i]
            row = [((l - d) % l) * w + r for d in range(l) for r in row]
        self._neg = array("i", row)

        # digitwise addition split into low/high halves to keep tables tiny
        h = n // 2
        self._lh = lh = pw[h]
        self._addlo = self._add_table(l, h)
        self._addhi = self._add_table(l, n - h)
        assert lh * (self.lpow // lh) == self.lpow

    @staticmethod
    def _add_table(l, ndigits):
        size = l**ndigits
        digits = []
        for v in range(size):
            d, x = [], v
            for _ in range(ndigits):
                x, r = divmod(x, l)
                d.append(r)
            digits.append(d)
        table = []
        for a in range(size):
            da = digits[a]
            row = array("i", [0]) * size
            for b in range(size):
                db = digits[b]
                v = 0
                for i in range(ndigits - 1, -1, -1):
                    v = v * l + (da[i] + db[i]) % l
                row[b] = v
            table.append(row)
        return table

    # -- element ops ---------------------------------------------------

    def mul(self, a, b):
        ng = self.ng
        va, ga = divmod(a, ng)
        vb, gb = divmod(b, ng)
        vp = self._permv[ga][vb]
        lh = self._lh
        v = self._addhi[va // lh][vp // lh] * lh + self._addlo[va % lh][vp % lh]
        return v * ng + self._gmul[ga * ng + gb]

    def inv(self, a):
        ng = self.ng
        v, g = divmod(a, ng)
        gi = self._ginv[g]
        return self._neg[self._permv[gi][v]] * ng + gi

    def conj(self, t, x):
        return self.mul(self.mul(t, x), self.inv(t))

    # -- hot loops -----------------------------------------------------

    def class_partition(self, gens):
        """Partition all elements into conjugation orbits under the group
        generated by ``gens``. Returns (class_index, reps, sizes); the
        representative of each class is its minimal encoding."""
        ng = self.ng
        lh = self._lh
        gmul = self._gmul
        permv = self._permv
        addlo = self._addlo
        addhi = self._addhi
        size = self.size

        genparts = []
        for t in gens:
            ti = self.inv(t)
            vt, gt = divmod(t, ng)
            vti, gti = divmod(ti, ng)
            genparts.append((vt, gt, vti, gti))

        cls = array("i", [-1]) * size
        reps = []
        sizes = []
        for s in range(size):
            if cls[s] >= 0:
                continue
            c = len(reps)
            reps.append(s)
            cls[s] = c
            count = 1
            stack = [s]
            pop = stack.pop
            push = stack.append
            while stack:
                x = pop()
                vx, gx = divmod(x, ng)
                for vt, gt, vti, gti in genparts:
                    # y = t * x * t^-1, the two products inlined
                    vp = permv[gt][vx]
                    v1 = addhi[vt // lh][vp // lh] * lh + addlo[vt % lh][vp % lh]
                    g1 = gmul[gt * ng + gx]
                    vp = permv[g1][vti]
                    vy = addhi[v1 // lh][vp // lh] * lh + addlo[v1 % lh][vp % lh]
                    y = vy * ng + gmul[g1 * ng + gti]
                    if cls[y] < 0:
                        cls[y] = c
                        count += 1
                        push(y)
            sizes.append(count)
        return cls, reps, sizes

    def subgroup_conjugacy_scan(self, a_gens, b_mask):
        """Smallest t with t<a_gens>t^-1 inside the mask, or -1. With
        |A| = |B| and b_mask marking B, a hit means tAt^-1 = B."""
        ng = self.ng
        lh = self._lh
        gmul = self._gmul
        ginv = self._ginv
        permv = self._permv
        addlo = self._addlo
        addhi = self._addhi
        neg = self._neg

        agens = []
        for a in a_gens:
            agens.append(divmod(a, ng))

        for t in range(self.size):
            vt, gt = divmod(t, ng)
            gti = ginv[gt]
            vti = neg[permv[gti][vt]]
            hit = True
            for va, ga in agens:
                vp = permv[gt][va]
                v1 = addhi[vt // lh][vp // lh] * lh + addlo[vt % lh][vp % lh]
                g1 = gmul[gt * ng + ga]
                vp = permv[g1][vti]
                vy = addhi[v1 // lh][vp // lh] * lh + addlo[v1 % lh][vp % lh]
                if not b_mask[vy * ng + gmul[g1 * ng + gti]]:
                    hit = False
                    break
            if hit:
                return t
        return -1
