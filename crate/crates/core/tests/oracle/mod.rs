//! Standalone exact arithmetic, row reduction and hand-assembled structure
//! constants for `k[C_n]`. Shares nothing with the library beyond the final
//! conversion into its scalars for comparison.

use std::fmt::Debug;

use entwine::exactla::{Field, Scalar};

pub trait Num: Clone + PartialEq + Debug {
    fn int(n: i64) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    /// The same value as a library scalar over `f`.
    fn lift(&self, f: Field) -> Scalar;

    fn zero() -> Self {
        Self::int(0)
    }
    fn one() -> Self {
        Self::int(1)
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }
}

/// `n/d` in lowest terms with `d > 0`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Rat(i128, i128);

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl Rat {
    pub fn new(n: i128, d: i128) -> Rat {
        assert!(d != 0);
        let g = gcd(n, d).max(1) * d.signum();
        Rat(n / g, d / g)
    }
}

impl Num for Rat {
    fn int(n: i64) -> Self {
        Rat(n as i128, 1)
    }
    fn add(&self, o: &Self) -> Self {
        Rat::new(self.0 * o.1 + o.0 * self.1, self.1 * o.1)
    }
    fn mul(&self, o: &Self) -> Self {
        Rat::new(self.0 * o.0, self.1 * o.1)
    }
    fn neg(&self) -> Self {
        Rat(-self.0, self.1)
    }
    fn inv(&self) -> Option<Self> {
        (self.0 != 0).then(|| Rat::new(self.1, self.0))
    }
    fn lift(&self, f: Field) -> Scalar {
        f.ratio(self.0 as i64, self.1 as i64).unwrap()
    }
}

/// Residues modulo the prime `P`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Zp<const P: i64>(i64);

impl<const P: i64> Num for Zp<P> {
    fn int(n: i64) -> Self {
        Zp(n.rem_euclid(P))
    }
    fn add(&self, o: &Self) -> Self {
        Zp((self.0 + o.0) % P)
    }
    fn mul(&self, o: &Self) -> Self {
        Zp(self.0 * o.0 % P)
    }
    fn neg(&self) -> Self {
        Zp((P - self.0) % P)
    }
    fn inv(&self) -> Option<Self> {
        (1..P).map(Zp).find(|x| x.mul(self).0 == 1)
    }
    fn lift(&self, f: Field) -> Scalar {
        f.from_i64(self.0)
    }
}

pub type Mat<T> = Vec<Vec<T>>;

pub fn zeros<T: Num>(rows: usize, cols: usize) -> Mat<T> {
    vec![vec![T::zero(); cols]; rows]
}

/// Reduced row echelon form and pivot columns.
pub fn rref<T: Num>(m: &Mat<T>, cols: usize) -> (Mat<T>, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv().unwrap();
        for x in a[r].iter_mut() {
            *x = x.mul(&inv);
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let k = a[i][c].clone();
                for j in 0..cols {
                    let v = a[i][j].sub(&k.mul(&a[r][j]));
                    a[i][j] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank<T: Num>(m: &Mat<T>, cols: usize) -> usize {
    rref(m, cols).1.len()
}

/// Solutions of `m x = b`: a particular solution with free variables zero
/// and a kernel basis, or `None` when inconsistent.
pub struct Affine<T> {
    pub particular: Vec<T>,
    pub kernel: Vec<Vec<T>>,
}

pub fn solve<T: Num>(m: &Mat<T>, b: &[T], cols: usize) -> Option<Affine<T>> {
    let aug: Mat<T> = m.iter().zip(b).map(|(row, x)| row.iter().cloned().chain([x.clone()]).collect()).collect();
    let (r, pivots) = rref(&aug, cols + 1);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut particular = vec![T::zero(); cols];
    for (i, &p) in pivots.iter().enumerate() {
        particular[p] = r[i][cols].clone();
    }
    let kernel = (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![T::zero(); cols];
            v[free] = T::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = r[i][free].neg();
            }
            v
        })
        .collect();
    Some(Affine { particular, kernel })
}

pub fn nullspace<T: Num>(m: &Mat<T>, cols: usize) -> Vec<Vec<T>> {
    solve(m, &vec![T::zero(); m.len()], cols).unwrap().kernel
}

pub fn mat_vec<T: Num>(m: &Mat<T>, v: &[T]) -> Vec<T> {
    m.iter().map(|row| row.iter().zip(v).fold(T::zero(), |s, (a, b)| s.add(&a.mul(b)))).collect()
}

pub fn mat_mul<T: Num>(a: &Mat<T>, b: &Mat<T>) -> Mat<T> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| (0..cols).map(|j| row.iter().zip(b).fold(T::zero(), |s, (x, r)| s.add(&x.mul(&r[j])))).collect())
        .collect()
}

/// Row-major entries as library scalars.
pub fn lift_all<T: Num>(f: Field, m: &Mat<T>) -> Vec<Scalar> {
    m.iter().flatten().map(|x| x.lift(f)).collect()
}

pub fn lift_vec<T: Num>(f: Field, v: &[T]) -> Vec<Scalar> {
    v.iter().map(|x| x.lift(f)).collect()
}

/// Structure constants of `k[C_n]` with basis `g⁰, …, g^{n-1}`, used as the
/// algebra, the group-like coalgebra and the coaction `g ↦ g⊗g`.
pub struct Cyclic {
    pub n: usize,
}

impl Cyclic {
    fn m(&self, i: usize, j: usize) -> usize {
        (i + j) % self.n
    }

    fn inv(&self, i: usize) -> usize {
        (self.n - i) % self.n
    }

    /// Equation row of a linear form given by a closure over unknown indices.
    fn rows<T: Num>(&self, unknowns: usize, outputs: usize, coeff: impl Fn(usize, usize) -> i64) -> Mat<T> {
        (0..outputs).map(|o| (0..unknowns).map(|u| T::int(coeff(o, u))).collect()).collect()
    }

    /// `ψ: C⊗A -> A⊗C`, `g^i⊗g^j ↦ g^j⊗g^{i+j}`; column `i·n + j`.
    pub fn psi<T: Num>(&self) -> Mat<T> {
        let n = self.n;
        let mut m = zeros(n * n, n * n);
        for i in 0..n {
            for j in 0..n {
                m[j * n + self.m(i, j)][i * n + j] = T::one();
            }
        }
        m
    }

    /// `can: A⊗A -> A⊗C`, `g^i⊗g^j ↦ g^{i+j}⊗g^j`.
    pub fn can<T: Num>(&self) -> Mat<T> {
        let n = self.n;
        let mut m = zeros(n * n, n * n);
        for i in 0..n {
            for j in 0..n {
                m[self.m(i, j) * n + j][i * n + j] = T::one();
            }
        }
        m
    }

    /// Matrix of `ρ − (−⊗1)` on `A`; its kernel is the coinvariants.
    pub fn coinvariant_equations<T: Num>(&self) -> Mat<T> {
        let n = self.n;
        let mut m = zeros::<T>(n * n, n);
        for i in 0..n {
            m[i * n + i][i] = m[i * n + i][i].add(&T::one());
            m[i * n][i] = m[i * n][i].sub(&T::one());
        }
        m
    }

    /// Normalised integrals `𝔷 = Σ z_{a,c} g^a⊗g^c`: `g^b·𝔷 = 𝔷·g^b` for all
    /// `b`, where `(x⊗c)·a = xψ(c⊗a)`, and `Σ_c z_{a,c} = δ_{a,0}`.
    pub fn integral_system<T: Num>(&self) -> (Mat<T>, Vec<T>) {
        let n = self.n;
        let mut m = Vec::new();
        for b in 0..n {
            m.extend(self.rows::<T>(n * n, n * n, |o, u| {
                let (a, c) = (u / n, u % n);
                let left = (self.m(b, a) * n + c == o) as i64;
                let right = (self.m(a, b) * n + self.m(c, b) == o) as i64;
                left - right
            }));
        }
        let mut rhs = vec![T::zero(); m.len()];
        m.extend(self.rows::<T>(n * n, n, |o, u| (u / n == o) as i64));
        rhs.extend((0..n).map(|o| T::int((o == 0) as i64)));
        (m, rhs)
    }

    /// Separability idempotents `u = Σ u_{i,j} g^i⊗g^j` over `B = k`:
    /// `g^b u = u g^b` and `Σ u_{i,j} g^{i+j} = 1`.
    pub fn separability_system<T: Num>(&self) -> (Mat<T>, Vec<T>) {
        let n = self.n;
        let mut m = Vec::new();
        for b in 0..n {
            m.extend(self.rows::<T>(n * n, n * n, |o, u| {
                let (i, j) = (u / n, u % n);
                (self.m(b, i) * n + j == o) as i64 - (i * n + self.m(j, b) == o) as i64
            }));
        }
        let mut rhs = vec![T::zero(); m.len()];
        m.extend(self.rows::<T>(n * n, n, |o, u| (self.m(u / n, u % n) == o) as i64));
        rhs.extend((0..n).map(|o| T::int((o == 0) as i64)));
        (m, rhs)
    }

    /// `φ: C -> A` with entries `φ_{a,c}` at `a·n + c`, over `B = k` and
    /// `ρ(1) = 1⊗1`: `ψ(g^c⊗φ(g^c)) = φ(g^c)⊗1` and `φ(1) = 1`. The
    /// `B`-balance condition is vacuous for `B = k`.
    pub fn phi_system<T: Num>(&self) -> (Mat<T>, Vec<T>) {
        let n = self.n;
        let mut m = Vec::new();
        for c in 0..n {
            m.extend(self.rows::<T>(n * n, n * n, |o, u| {
                let (a, cc) = (u / n, u % n);
                if cc != c {
                    return 0;
                }
                (a * n + self.m(c, a) == o) as i64 - (a * n == o) as i64
            }));
        }
        let mut rhs = vec![T::zero(); m.len()];
        m.extend(self.rows::<T>(n * n, n, |o, u| (u == o * n) as i64));
        rhs.extend((0..n).map(|o| T::int((o == 0) as i64)));
        (m, rhs)
    }

    /// `E(g^i) = g^i φ(g^i)` as a matrix on `A`.
    pub fn expectation<T: Num>(&self, phi: &[T]) -> Mat<T> {
        let n = self.n;
        let mut e = zeros::<T>(n, n);
        for i in 0..n {
            for a in 0..n {
                let v = e[self.m(i, a)][i].add(&phi[a * n + i]);
                e[self.m(i, a)][i] = v;
            }
        }
        e
    }

    /// `τ` with `Σ E(a u_i) u^i = τa = Σ u_i E(u^i a)` on every basis `a`.
    pub fn tau<T: Num>(&self, u: &[T], phi: &[T]) -> Option<T> {
        let n = self.n;
        let e = self.expectation(phi);
        let apply = |x: usize| -> Vec<T> { (0..n).map(|r| e[r][x].clone()).collect() };
        let mut sides = Vec::new();
        for a in 0..n {
            let mut left = vec![T::zero(); n];
            let mut right = vec![T::zero(); n];
            for i in 0..n {
                for j in 0..n {
                    let w = &u[i * n + j];
                    for (k, ek) in apply(self.m(a, i)).iter().enumerate() {
                        let t = self.m(k, j);
                        left[t] = left[t].add(&w.mul(ek));
                    }
                    for (k, ek) in apply(self.m(j, a)).iter().enumerate() {
                        let t = self.m(i, k);
                        right[t] = right[t].add(&w.mul(ek));
                    }
                }
            }
            sides.push((a, left, right));
        }
        let tau = sides[0].2[0].clone();
        let scaled = |a: usize| -> Vec<T> { (0..n).map(|t| if t == a { tau.clone() } else { T::zero() }).collect() };
        sides.iter().all(|(a, l, r)| *l == scaled(*a) && *r == scaled(*a)).then_some(tau)
    }

    /// `δ⁰` and `δ¹` of the Hochschild complex of the regular bimodule
    /// relative to `k`: `(δ⁰m)(a) = am − ma`,
    /// `(δ¹f)(a, b) = a f(b) − f(ab) + f(a) b`. Cochains are vectorised as
    /// `f(g^i)` coefficient `x` at `x·n^k + i`.
    pub fn hochschild<T: Num>(&self) -> (Mat<T>, Mat<T>) {
        let n = self.n;
        let mut d0 = zeros::<T>(n * n, n);
        for m in 0..n {
            for a in 0..n {
                let v = d0[self.m(a, m) * n + a][m].add(&T::one());
                d0[self.m(a, m) * n + a][m] = v;
                let v = d0[self.m(m, a) * n + a][m].sub(&T::one());
                d0[self.m(m, a) * n + a][m] = v;
            }
        }
        let mut d1 = zeros::<T>(n * n * n, n * n);
        for x in 0..n {
            for i in 0..n {
                let col = x * n + i;
                for a in 0..n {
                    for b in 0..n {
                        let out = |y: usize| y * n * n + a * n + b;
                        // a f(b)
                        if b == i {
                            let r = out(self.m(a, x));
                            d1[r][col] = d1[r][col].add(&T::one());
                        }
                        // − f(ab)
                        if self.m(a, b) == i {
                            let r = out(x);
                            d1[r][col] = d1[r][col].sub(&T::one());
                        }
                        // f(a) b
                        if a == i {
                            let r = out(self.m(x, b));
                            d1[r][col] = d1[r][col].add(&T::one());
                        }
                    }
                }
            }
        }
        (d0, d1)
    }

    /// `dim H¹ = dim ker δ¹ − rank δ⁰`, after checking `δ¹δ⁰ = 0`.
    pub fn h1<T: Num>(&self) -> usize {
        let n = self.n;
        let (d0, d1) = self.hochschild::<T>();
        assert!(mat_mul(&d1, &d0).iter().flatten().all(Num::is_zero));
        (n * n - rank(&d1, n * n)) - rank(&d0, n)
    }

    /// Cotranslation `γ(g^i⊗g^j) = g^{j−i}` of the self-coextension with
    /// action `g^i·g^a = g^{i+a}`; column `i·n + j`.
    pub fn cotranslation<T: Num>(&self) -> Mat<T> {
        let n = self.n;
        let mut m = zeros(n, n * n);
        for i in 0..n {
            for j in 0..n {
                m[self.m(j, self.inv(i))][i * n + j] = T::one();
            }
        }
        m
    }

    /// `μ(γ⊗A) = γ(C⊗ρ_C)` and `μ(γ⊗γ)(C⊗Δ⊗C) = γ(C⊗ε⊗C)` on basis triples.
    pub fn cotranslation_identities<T: Num>(&self, gamma: &Mat<T>) -> bool {
        let n = self.n;
        let col = |i: usize, j: usize| -> Vec<T> { (0..n).map(|r| gamma[r][i * n + j].clone()).collect() };
        let times = |x: &[T], y: &[T]| -> Vec<T> {
            let mut out = vec![T::zero(); n];
            for (i, xi) in x.iter().enumerate() {
                for (j, yj) in y.iter().enumerate() {
                    let t = self.m(i, j);
                    out[t] = out[t].add(&xi.mul(yj));
                }
            }
            out
        };
        let basis = |k: usize| -> Vec<T> { (0..n).map(|t| T::int((t == k) as i64)).collect() };
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    times(&col(i, j), &basis(k)) == col(i, self.m(j, k))
                        && times(&col(i, j), &col(j, k)) == col(i, k)
                })
            })
        })
    }

    /// `ζ(g^c) = can⁻¹(1⊗g^c)` read off by solving `can x = 1⊗g^c`; entry
    /// `(i·n + j, c)`.
    pub fn can_inv_unit<T: Num>(&self) -> Option<Mat<T>> {
        let n = self.n;
        let can = self.can::<T>();
        let mut z = zeros(n * n, n);
        for c in 0..n {
            let mut rhs = vec![T::zero(); n * n];
            rhs[c] = T::one();
            let sol = solve(&can, &rhs, n * n)?;
            if !sol.kernel.is_empty() {
                return None;
            }
            for (r, x) in sol.particular.into_iter().enumerate() {
                z[r][c] = x;
            }
        }
        Some(z)
    }
}
