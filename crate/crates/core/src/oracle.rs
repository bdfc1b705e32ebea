//! Brute-force buildings of `GL_n(F_p)` and `Sp_2n(F_p)` for tiny `n, p`:
//! subspaces in reduced row echelon form, the 1-skeleton, the geodesic edge
//! graph `X₂`, and exact closed-walk counts.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::weyl::Family;

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// A matrix over `F_p`, stored by rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FqMatrix {
    p: u8,
    rows: Vec<Vec<u8>>,
}

impl FqMatrix {
    pub fn new(p: u8, rows: Vec<Vec<u8>>) -> Self {
        let rows = rows.into_iter().map(|r| r.into_iter().map(|x| x % p).collect()).collect();
        Self { p, rows }
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    fn inv(&self, x: u8) -> u8 {
        // Fermat: x^(p-2)
        let p = self.p as u32;
        let mut acc = 1u32;
        for _ in 0..p - 2 {
            acc = acc * x as u32 % p;
        }
        acc as u8
    }

    /// Reduced row echelon form with zero rows dropped. The first nonzero
    /// entry of each row is the pivot, scaled to 1.
    pub fn rref(&self) -> Self {
        let p = self.p as u32;
        let mut rows = self.rows.clone();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut r = 0;
        for col in 0..ncols {
            let Some(piv) = (r..rows.len()).find(|&i| rows[i][col] != 0) else { continue };
            rows.swap(r, piv);
            let s = self.inv(rows[r][col]) as u32;
            for x in rows[r].iter_mut() {
                *x = (*x as u32 * s % p) as u8;
            }
            let pivot = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row[col] != 0 {
                    let f = row[col] as u32;
                    for (x, &y) in row.iter_mut().zip(&pivot) {
                        *x = ((*x as u32 + p - f * y as u32 % p) % p) as u8;
                    }
                }
            }
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        Self { p: self.p, rows }
    }

    pub fn rank(&self) -> usize {
        self.rref().rows.len()
    }
}

/// A subspace of `F_p^N`, canonically its reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    basis: Vec<Vec<u8>>,
}

impl Subspace {
    pub fn span(p: u8, rows: Vec<Vec<u8>>) -> Self {
        Self { basis: FqMatrix::new(p, rows).rref().rows }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u8>] {
        &self.basis
    }

    fn label(&self) -> String {
        let rows: Vec<String> = self.basis.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        format!("<{}>", rows.join(","))
    }
}

/// All `dim`-dimensional subspaces of `F_p^n`, enumerated directly in
/// reduced row echelon form.
pub fn enumerate_subspaces(n: usize, q: u64, dim: usize) -> Result<Vec<Subspace>> {
    if !is_prime(q) {
        return Err(Error::PrimeFieldsOnly(q));
    }
    if dim > n || q > 251 {
        return Err(Error::OracleSizeOutOfRange(format!("dim {dim} in F_{q}^{n}")));
    }
    let mut out = Vec::new();
    let mut pivots = Vec::with_capacity(dim);
    choose_pivots(n, dim, 0, &mut pivots, &mut |piv| {
        // free slots: (row, col) right of the row's pivot, not a pivot column
        let free: Vec<(usize, usize)> = piv
            .iter()
            .enumerate()
            .flat_map(|(r, &pc)| (pc + 1..n).filter(|c| !piv.contains(c)).map(move |c| (r, c)))
            .collect();
        let total = (q as usize).pow(free.len() as u32);
        for mut code in 0..total {
            let mut rows = vec![vec![0u8; n]; dim];
            for (r, &pc) in piv.iter().enumerate() {
                rows[r][pc] = 1;
            }
            for &(r, c) in &free {
                rows[r][c] = (code % q as usize) as u8;
                code /= q as usize;
            }
            out.push(Subspace { basis: rows });
        }
    });
    Ok(out)
}

fn choose_pivots(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if cur.len() == k {
        f(cur);
        return;
    }
    for c in start..n {
        cur.push(c);
        choose_pivots(n, k, c + 1, cur, f);
        cur.pop();
    }
}

/// `⟨x, y⟩ = Σ_i (x_{e_i} y_{f_i} − x_{f_i} y_{e_i})` with coordinates
/// ordered `e_1..e_n, f_n..f_1`.
fn symplectic(p: u8, x: &[u8], y: &[u8]) -> u8 {
    let n2 = x.len();
    let n = n2 / 2;
    let p = p as u32;
    let mut acc = 0u32;
    for i in 1..=n {
        let (e, f) = (i - 1, n2 - i);
        acc += x[e] as u32 * y[f] as u32 % p;
        acc += p - x[f] as u32 * y[e] as u32 % p;
    }
    (acc % p) as u8
}

/// Totally isotropic `dim`-subspaces of `F_p^{n2}` under the standard form.
pub fn enumerate_isotropic(n2: usize, q: u64, dim: usize) -> Result<Vec<Subspace>> {
    if n2 % 2 == 1 || dim > n2 / 2 {
        return Err(Error::OracleSizeOutOfRange(format!("isotropic dim {dim} in F_{q}^{n2}")));
    }
    let p = q as u8;
    Ok(enumerate_subspaces(n2, q, dim)?
        .into_iter()
        .filter(|s| s.basis.iter().all(|x| s.basis.iter().all(|y| symplectic(p, x, y) == 0)))
        .collect())
}

/// Ambient data for the geometric tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Geometry {
    pub family: Family,
    /// `GL_n` for A, `Sp_2n` for C.
    pub n: usize,
    pub p: u8,
}

impl Geometry {
    fn stacked_rank(&self, a: &Subspace, c: &Subspace) -> usize {
        let rows = a.basis.iter().chain(&c.basis).cloned().collect();
        FqMatrix::new(self.p, rows).rank()
    }

    pub fn meet_dim(&self, a: &Subspace, c: &Subspace) -> usize {
        a.dim() + c.dim() - self.stacked_rank(a, c)
    }

    /// Proper inclusion `a ⊊ b`.
    pub fn properly_contains(&self, b: &Subspace, a: &Subspace) -> bool {
        a.dim() < b.dim() && self.stacked_rank(a, b) == b.dim()
    }

    /// `dim(A ∩ C^⊥)`.
    fn perp_meet_dim(&self, a: &Subspace, c: &Subspace) -> usize {
        let gram = a.basis.iter().map(|x| c.basis.iter().map(|y| symplectic(self.p, x, y)).collect()).collect();
        a.dim() - FqMatrix::new(self.p, gram).rank()
    }
}

/// Whether `x_minus → x → x_plus` is geodesic at `x`: the outer vertices are
/// opposite in the link of `x`.
pub fn geodesic_adjacent(geom: &Geometry, x_minus: &Subspace, x: &Subspace, x_plus: &Subspace) -> Result<bool> {
    let incident = |u: &Subspace| geom.properly_contains(x, u) || geom.properly_contains(u, x);
    if !incident(x_minus) || !incident(x_plus) {
        return Err(Error::NotAnEdge);
    }
    let below_a = x_minus.dim() < x.dim();
    let below_c = x_plus.dim() < x.dim();
    Ok(match (below_a, below_c) {
        (true, true) => x_minus.dim() + x_plus.dim() == x.dim() && geom.meet_dim(x_minus, x_plus) == 0,
        (false, false) => {
            let meets = geom.meet_dim(x_minus, x_plus) == x.dim();
            match geom.family {
                Family::A => meets && x_minus.dim() + x_plus.dim() - x.dim() == geom.n,
                _ => meets && x_minus.dim() == x_plus.dim() && geom.perp_meet_dim(x_minus, x_plus) == x.dim(),
            }
        }
        // opposite vertices of a join lie in the same factor
        _ => false,
    })
}

/// The 1-skeleton and the geodesic edge graph of a small building.
#[derive(Clone, Debug)]
pub struct BuildingSkeleton {
    pub geometry: Geometry,
    pub vertices: Vec<Subspace>,
    /// Undirected inclusion edges `(smaller, larger)`.
    pub edges: Vec<(usize, usize)>,
    /// Directed edges of the skeleton `(from, to)`.
    pub x2_vertices: Vec<(usize, usize)>,
    /// Out-neighbours in `X₂`.
    pub x2_adjacency: Vec<Vec<u32>>,
}

impl BuildingSkeleton {
    /// Type pair `(dim from, dim to)` of an `X₂` vertex.
    pub fn x2_type(&self, idx: usize) -> (usize, usize) {
        let (a, b) = self.x2_vertices[idx];
        (self.vertices[a].dim(), self.vertices[b].dim())
    }

    pub fn num_x2_edges(&self) -> usize {
        self.x2_adjacency.iter().map(|v| v.len()).sum()
    }

    /// Text dump: typed vertex labels, then one `src dst` line per `X₂` edge.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {} n={} q={}", self.geometry.family, self.geometry.n, self.geometry.p);
        for (i, &(a, b)) in self.x2_vertices.iter().enumerate() {
            let _ = writeln!(
                out,
                "# {i} {}->{} {}->{}",
                self.vertices[a].dim(),
                self.vertices[b].dim(),
                self.vertices[a].label(),
                self.vertices[b].label()
            );
        }
        for (src, outs) in self.x2_adjacency.iter().enumerate() {
            for dst in outs {
                let _ = writeln!(out, "{src} {dst}");
            }
        }
        out
    }
}

/// Build the skeleton for `(A, n ≤ 4, q ∈ {2,3})` or `(C, n = 2, q ∈ {2,3})`;
/// `(A, 5, 2)` and `(C, 3, 2)` are also accepted but slow.
pub fn build_x2(family: Family, n: usize, q: u64) -> Result<BuildingSkeleton> {
    if !is_prime(q) {
        return Err(Error::PrimeFieldsOnly(q));
    }
    let supported = match family {
        Family::A => ((2..=4).contains(&n) && (q == 2 || q == 3)) || (n == 5 && q == 2),
        Family::B | Family::C => (n == 2 && (q == 2 || q == 3)) || (n == 3 && q == 2),
        _ => false,
    };
    if !supported {
        return Err(Error::OracleSizeOutOfRange(format!("{family} n={n} q={q}")));
    }
    let family = if family == Family::B { Family::C } else { family };
    let geometry = Geometry { family, n, p: q as u8 };

    let mut vertices = Vec::new();
    match family {
        Family::A => {
            for d in 1..n {
                vertices.extend(enumerate_subspaces(n, q, d)?);
            }
        }
        _ => {
            for d in 1..=n {
                vertices.extend(enumerate_isotropic(2 * n, q, d)?);
            }
        }
    }

    let mut edges = Vec::new();
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); vertices.len()];
    for (i, a) in vertices.iter().enumerate() {
        for (j, b) in vertices.iter().enumerate() {
            if geometry.properly_contains(b, a) {
                edges.push((i, j));
                nbrs[i].push(j);
                nbrs[j].push(i);
            }
        }
    }

    let mut x2_vertices = Vec::with_capacity(2 * edges.len());
    for &(a, b) in &edges {
        x2_vertices.push((a, b));
        x2_vertices.push((b, a));
    }
    x2_vertices.sort_unstable();
    let index: HashMap<(usize, usize), u32> = x2_vertices.iter().enumerate().map(|(i, &e)| (e, i as u32)).collect();

    let x2_adjacency = x2_vertices
        .iter()
        .map(|&(a, v)| {
            nbrs[v]
                .iter()
                .filter(|&&c| c != a)
                .filter(|&&c| {
                    geodesic_adjacent(&geometry, &vertices[a], &vertices[v], &vertices[c])
                        .expect("incident by construction")
                })
                .map(|&c| index[&(v, c)])
                .collect()
        })
        .collect();

    Ok(BuildingSkeleton { geometry, vertices, edges, x2_vertices, x2_adjacency })
}

/// `N(L) = tr(A^L)` for `L = 1..=lmax`, by sparse products from each start
/// vertex in parallel. Bit-identical regardless of scheduling.
pub fn closed_walk_counts(sk: &BuildingSkeleton, lmax: usize) -> Result<Vec<BigInt>> {
    if lmax > 20 {
        return Err(Error::OracleSizeOutOfRange(format!("walk length {lmax} > 20")));
    }
    let nv = sk.x2_vertices.len();
    let per_start: Vec<Vec<u128>> = (0..nv)
        .into_par_iter()
        .map(|start| {
            let mut x = vec![0u128; nv];
            x[start] = 1;
            let mut diag = Vec::with_capacity(lmax);
            for _ in 0..lmax {
                let mut y = vec![0u128; nv];
                for (v, &xv) in x.iter().enumerate() {
                    if xv == 0 {
                        continue;
                    }
                    for &w in &sk.x2_adjacency[v] {
                        y[w as usize] = y[w as usize].checked_add(xv).ok_or(Error::Overflow)?;
                    }
                }
                diag.push(y[start]);
                x = y;
            }
            Ok(diag)
        })
        .collect::<Result<_>>()?;
    let mut totals = vec![0u128; lmax];
    for diag in per_start {
        for (t, d) in totals.iter_mut().zip(diag) {
            *t = t.checked_add(d).ok_or(Error::Overflow)?;
        }
    }
    Ok(totals.into_iter().map(BigInt::from).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::typeorbits::NextType;
    use crate::weyl::RootSystem;

    fn gaussian_binomial(n: u32, k: u32, q: u64) -> u64 {
        let mut num = 1u64;
        let mut den = 1u64;
        for i in 0..k {
            num *= q.pow(n - i) - 1;
            den *= q.pow(i + 1) - 1;
        }
        num / den
    }

    fn isotropic_count(n: u32, k: u32, q: u64) -> u64 {
        gaussian_binomial(n, k, q) * (0..k).map(|i| q.pow(n - i) + 1).product::<u64>()
    }

    fn unit(n: usize, i: usize) -> Vec<u8> {
        let mut v = vec![0; n];
        v[i] = 1;
        v
    }

    #[test]
    fn subspace_counts() {
        assert_eq!(enumerate_subspaces(3, 2, 1).unwrap().len(), 7);
        assert_eq!(enumerate_isotropic(4, 2, 1).unwrap().len(), 15);
        assert_eq!(enumerate_isotropic(4, 2, 2).unwrap().len(), 15);
        for q in [2, 3] {
            for n in 1..=4 {
                for k in 0..=n {
                    assert_eq!(
                        enumerate_subspaces(n as usize, q, k as usize).unwrap().len() as u64,
                        gaussian_binomial(n, k, q)
                    );
                }
            }
            for n in 1..=2 {
                for k in 1..=n {
                    let got = enumerate_isotropic(2 * n as usize, q, k as usize).unwrap().len() as u64;
                    assert_eq!(got, isotropic_count(n, k, q));
                }
            }
        }
        assert_eq!(enumerate_subspaces(3, 4, 1), Err(Error::PrimeFieldsOnly(4)));
    }

    #[test]
    fn rref_is_canonical() {
        let a = Subspace::span(3, vec![vec![1, 1, 0], vec![0, 1, 2]]);
        let b = Subspace::span(3, vec![vec![1, 2, 2], vec![2, 0, 2]]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn geodesic_examples() {
        let g = Geometry { family: Family::A, n: 3, p: 2 };
        let v = Subspace::span(2, vec![unit(3, 0), unit(3, 1)]);
        let a = Subspace::span(2, vec![unit(3, 0)]);
        let c = Subspace::span(2, vec![unit(3, 1)]);
        assert!(geodesic_adjacent(&g, &a, &v, &c).unwrap());
        assert!(!geodesic_adjacent(&g, &a, &v, &a).unwrap());
        let far = Subspace::span(2, vec![unit(3, 2)]);
        assert_eq!(geodesic_adjacent(&g, &far, &v, &a), Err(Error::NotAnEdge));

        // Sp_4, coordinates e1 e2 f2 f1
        let g = Geometry { family: Family::C, n: 2, p: 2 };
        let v = Subspace::span(2, vec![unit(4, 0)]);
        let a = Subspace::span(2, vec![unit(4, 0), unit(4, 1)]);
        let c = Subspace::span(2, vec![unit(4, 0), unit(4, 2)]);
        assert!(geodesic_adjacent(&g, &a, &v, &c).unwrap());
        assert!(!geodesic_adjacent(&g, &a, &v, &a).unwrap());
    }

    #[test]
    fn skeleton_sizes() {
        for (f, n, q, v, e, x2) in
            [(Family::A, 3, 2, 14, 21, 42), (Family::C, 2, 2, 30, 45, 90), (Family::A, 3, 3, 26, 52, 104)]
        {
            let sk = build_x2(f, n, q).unwrap();
            assert_eq!((sk.vertices.len(), sk.edges.len(), sk.x2_vertices.len()), (v, e, x2), "{f} {n} {q}");
        }
        assert!(matches!(build_x2(Family::A, 5, 3), Err(Error::OracleSizeOutOfRange(_))));
        assert!(matches!(build_x2(Family::D, 4, 2), Err(Error::OracleSizeOutOfRange(_))));
        assert_eq!(build_x2(Family::A, 3, 4).unwrap_err(), Error::PrimeFieldsOnly(4));
    }

    #[test]
    fn x2_edges_follow_next_type() {
        for (f, n, q) in [(Family::A, 3, 2), (Family::A, 4, 2), (Family::C, 2, 3)] {
            let sk = build_x2(f, n, q).unwrap();
            let rs = match f {
                Family::A => RootSystem::build(Family::A, n - 1).unwrap(),
                _ => RootSystem::build(Family::C, n).unwrap(),
            };
            let nt = NextType::new(&rs);
            let mut degree_by_type: HashMap<(usize, usize), usize> = HashMap::new();
            for (i, outs) in sk.x2_adjacency.iter().enumerate() {
                let t = sk.x2_type(i);
                for &j in outs {
                    assert_eq!(nt.next(t).unwrap(), sk.x2_type(j as usize));
                }
                let d = *degree_by_type.entry(t).or_insert(outs.len());
                assert_eq!(d, outs.len(), "out-degree varies within type {t:?}");
            }
        }
    }

    #[test]
    fn walk_counts_fano() {
        let sk = build_x2(Family::A, 3, 2).unwrap();
        let n = closed_walk_counts(&sk, 6).unwrap();
        assert_eq!(n[0], BigInt::from(0));
        assert!(closed_walk_counts(&sk, 21).is_err());
        let dump = sk.dump();
        assert_eq!(dump.lines().filter(|l| !l.starts_with('#')).count(), sk.num_x2_edges());
    }
}
