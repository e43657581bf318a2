# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of the pure-Python kernel (pykernel): same API, same
encoding, bit-identical outputs. See pykernel for the conventions."""

from cpython cimport array
import array

cdef array.array _int_template = array.array("i", [])
cdef array.array _long_template = array.array("l", [])


cdef class TildeKernel:
    cdef public int l, n, ng
    cdef public long lpow, size
    cdef long lh, llo, lhi
    cdef array.array _gmul_arr, _ginv_arr, _permv_arr, _negv_arr
    cdef array.array _addlo_arr, _addhi_arr
    cdef int[::1] gmul
    cdef int[::1] ginv
    cdef int[::1] permv
    cdef int[::1] negv
    cdef int[::1] addlo
    cdef int[::1] addhi

    def __init__(self, l, n, ng, gmul, ginv, sigma):
        self.l = l
        self.n = n
        self.ng = ng
        cdef long lpow = 1
        cdef int i
        for i in range(n):
            lpow *= l
        self.lpow = lpow
        self.size = lpow * ng

        self._gmul_arr = array.array("i", gmul)
        self._ginv_arr = array.array("i", ginv)
        self.gmul = self._gmul_arr
        self.ginv = self._ginv_arr

        cdef array.array sigma_arr = array.array("i", sigma)
        cdef int[::1] sig = sigma_arr

        cdef long pw[64]
        pw[0] = 1
        for i in range(n):
            pw[i + 1] = pw[i] * l

        # permv[g*lpow + V] = sum_i digit_i(V) * l^sigma_g(i)
        self._permv_arr = array.clone(_int_template, ng * lpow, zero=True)
        self.permv = self._permv_arr
        cdef long V, v, out
        cdef int g, d
        for g in range(ng):
            for V in range(lpow):
                v = V
                out = 0
                for i in range(n):
                    d = <int>(v % l)
                    v //= l
                    if d:
                        out += d * pw[sig[g * n + i]]
                self.permv[g * lpow + V] = <int>out

        # digitwise negation
        self._negv_arr = array.clone(_int_template, lpow, zero=True)
        self.negv = self._negv_arr
        for V in range(lpow):
            v = V
            out = 0
            for i in range(n):
                d = <int>(v % l)
                v //= l
                if d:
                    out += (l - d) * pw[i]
            self.negv[V] = <int>out

        # digitwise addition split into low/high halves, as in pykernel
        cdef int h = n // 2
        self.lh = pw[h]
        self.llo = pw[h]
        self.lhi = lpow // pw[h]
        self._addlo_arr = self._add_table(h)
        self._addhi_arr = self._add_table(n - h)
        self.addlo = self._addlo_arr
        self.addhi = self._addhi_arr

    cdef array.array _add_table(self, int ndigits):
        cdef long size = 1
        cdef int i
        for i in range(ndigits):
            size *= self.l
        cdef array.array table = array.clone(_int_template, size * size, zero=True)
        cdef int[::1] tab = table
        cdef long a, b, va, vb, v, pw
        cdef int l = self.l
        for a in range(size):
            for b in range(size):
                va = a
                vb = b
                v = 0
                pw = 1
                for i in range(ndigits):
                    v += ((va % l) + (vb % l)) % l * pw
                    va //= l
                    vb //= l
                    pw *= l
                tab[a * size + b] = <int>v
        return table

    # -- element ops ---------------------------------------------------

    cdef inline long c_mul(self, long a, long b):
        cdef long ngl = self.ng
        cdef long va = a // ngl
        cdef int ga = <int>(a % ngl)
        cdef long vb = b // ngl
        cdef int gb = <int>(b % ngl)
        cdef long vp = self.permv[ga * self.lpow + vb]
        cdef long lh = self.lh
        cdef long v = <long>self.addhi[(va // lh) * self.lhi + vp // lh] * lh \
            + self.addlo[(va % lh) * self.llo + vp % lh]
        return v * ngl + self.gmul[ga * self.ng + gb]

    cdef inline long c_inv(self, long a):
        cdef long ngl = self.ng
        cdef long v = a // ngl
        cdef int g = <int>(a % ngl)
        cdef int gi = self.ginv[g]
        return <long>self.negv[self.permv[gi * self.lpow + v]] * ngl + gi

    def mul(self, a, b):
        return self.c_mul(a, b)

    def inv(self, a):
        return self.c_inv(a)

    def conj(self, t, x):
        return self.c_mul(self.c_mul(t, x), self.c_inv(t))

    # -- hot loops -----------------------------------------------------

    def class_partition(self, gens):
        cdef long size = self.size
        cdef array.array cls_arr = array.clone(_int_template, size, zero=False)
        cdef int[::1] cls = cls_arr
        cdef long i
        for i in range(size):
            cls[i] = -1

        cdef long ngen = len(gens)
        cdef array.array tg_arr = array.clone(_long_template, ngen, zero=True)
        cdef array.array ti_arr = array.clone(_long_template, ngen, zero=True)
        cdef long[::1] tg = tg_arr
        cdef long[::1] ti = ti_arr
        for i in range(ngen):
            tg[i] = gens[i]
            ti[i] = self.c_inv(gens[i])

        cdef array.array stack_arr = array.clone(_long_template, size, zero=True)
        cdef long[::1] stack = stack_arr
        cdef long sp, s, x, y, count
        cdef int c
        reps = []
        sizes = []
        for s in range(size):
            if cls[s] >= 0:
                continue
            c = <int>len(reps)
            reps.append(s)
            cls[s] = c
            count = 1
            sp = 0
            stack[sp] = s
            sp += 1
            while sp:
                sp -= 1
                x = stack[sp]
                for i in range(ngen):
                    y = self.c_mul(self.c_mul(tg[i], x), ti[i])
                    if cls[y] < 0:
                        cls[y] = c
                        count += 1
                        stack[sp] = y
                        sp += 1
            sizes.append(count)
        return cls_arr, reps, sizes

    def subgroup_conjugacy_scan(self, a_gens, b_mask):
        cdef const unsigned char[::1] mask = b_mask
        cdef long na = len(a_gens)
        cdef array.array ag_arr = array.clone(_long_template, na, zero=True)
        cdef long[::1] ag = ag_arr
        cdef long i
        for i in range(na):
            ag[i] = a_gens[i]
        cdef long t, ti, y
        cdef bint hit
        for t in range(self.size):
            ti = self.c_inv(t)
            hit = True
            for i in range(na):
                y = self.c_mul(self.c_mul(t, ag[i]), ti)
                if not mask[y]:
                    hit = False
                    break
            if hit:
                return t
        return -1
