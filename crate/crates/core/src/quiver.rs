//! `n`-triangulation quivers of glued ideal triangles and the matrices
//! `Q`, `H`, `K = n H^{-1}` and `P = K Q K^T` built from them.
//!
//! Small vertices of a face are barycentric points `(i, j, k)` with
//! `i + j + k = n`, corners excluded. Corner `v_1 = (n, 0, 0)`; slot 1 is the
//! edge `k = 0`, slot 2 is `i = 0`, slot 3 is `j = 0`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::qtorus::MonomialHom;
use crate::report::{Report, Verdict};

pub type Point = (u32, u32, u32);
pub type IntMatrix = Vec<Vec<i64>>;

/// Faces glued along edge slots. Each gluing is `[face, slot, face, slot]`
/// with slots in `1..=3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triangulation {
    pub n: u32,
    pub faces: usize,
    #[serde(default)]
    pub gluings: Vec<[usize; 4]>,
}

impl Triangulation {
    pub fn new(n: u32, faces: usize, gluings: Vec<[usize; 4]>) -> Result<Self> {
        let t = Self { n, faces, gluings };
        t.validate()?;
        Ok(t)
    }

    /// Named examples: `P3` (one triangle), `P4`, `P5` (fans of 2 and 3
    /// triangles) and `annulus` (two triangles glued along two edges).
    pub fn preset(name: &str, n: u32) -> Result<Self> {
        let (faces, gluings) = match name {
            "P3" => (1, vec![]),
            "P4" => (2, vec![[0, 1, 1, 1]]),
            "P5" => (3, vec![[0, 1, 1, 1], [1, 2, 2, 1]]),
            "annulus" => (2, vec![[0, 1, 1, 1], [0, 2, 1, 2]]),
            _ => return Err(Error::Surface(format!("unknown preset {name}"))),
        };
        Self::new(n, faces, gluings)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let t: Self = serde_json::from_str(s)?;
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::Surface(format!("rank {} must be at least 2", self.n)));
        }
        if self.faces == 0 {
            return Err(Error::Surface("need at least one face".into()));
        }
        let mut used = BTreeSet::new();
        for g in &self.gluings {
            for (f, s) in [(g[0], g[1]), (g[2], g[3])] {
                if f >= self.faces {
                    return Err(Error::Surface(format!("face {f} does not exist")));
                }
                if !(1..=3).contains(&s) {
                    return Err(Error::Surface(format!("slot {s} outside 1..=3")));
                }
                if !used.insert((f, s)) {
                    return Err(Error::Surface(format!("slot {s} of face {f} glued twice")));
                }
            }
        }
        Ok(())
    }

    /// Unglued `(face, slot)` pairs, in order.
    pub fn boundary_slots(&self) -> Vec<(usize, usize)> {
        let glued: BTreeSet<(usize, usize)> = self
            .gluings
            .iter()
            .flat_map(|g| [(g[0], g[1]), (g[2], g[3])])
            .collect();
        (0..self.faces)
            .flat_map(|f| (1..=3).map(move |s| (f, s)))
            .filter(|fs| !glued.contains(fs))
            .collect()
    }
}

/// Small vertices of one face in lex order.
pub fn face_vertices(n: u32) -> Vec<Point> {
    let mut out = Vec::new();
    for i in 0..=n {
        for j in 0..=n - i {
            let k = n - i - j;
            if i.max(j).max(k) < n {
                out.push((i, j, k));
            }
        }
    }
    out
}

/// The vertex at position `t` along a slot, counted counterclockwise.
pub fn slot_vertex(slot: usize, t: u32, n: u32) -> Point {
    match slot {
        1 => (t, n - t, 0),
        2 => (0, t, n - t),
        3 => (n - t, 0, t),
        _ => panic!("slot {slot} outside 1..=3"),
    }
}

fn slots_of(p: Point) -> Vec<usize> {
    let mut s = Vec::new();
    if p.2 == 0 {
        s.push(1);
    }
    if p.0 == 0 {
        s.push(2);
    }
    if p.1 == 0 {
        s.push(3);
    }
    s
}

/// Weighted arrows of one face: small edges in the three directions
/// `(1,-1,0)`, `(0,1,-1)`, `(-1,0,1)`, skipping those touching a corner;
/// weight 1 on boundary small edges, 2 inside.
pub fn face_arrows(n: u32) -> Vec<(Point, Point, i64)> {
    let n_i = n as i64;
    let dirs = [(1i64, -1i64, 0i64), (0, 1, -1), (-1, 0, 1)];
    let mut out = Vec::new();
    for i in 0..=n {
        for j in 0..=n - i {
            let p = (i, j, n - i - j);
            for d in dirs {
                let q = (p.0 as i64 + d.0, p.1 as i64 + d.1, p.2 as i64 + d.2);
                if q.0 < 0 || q.1 < 0 || q.2 < 0 {
                    continue;
                }
                let q = (q.0 as u32, q.1 as u32, q.2 as u32);
                let corner = |v: Point| v.0.max(v.1).max(v.2) as i64 == n_i;
                if corner(p) || corner(q) {
                    continue;
                }
                let sp = slots_of(p);
                let common = slots_of(q).iter().any(|s| sp.contains(s));
                out.push((p, q, if common { 1 } else { 2 }));
            }
        }
    }
    out
}

/// Vertex classes of a triangulation and its signed adjacency matrix.
#[derive(Clone, Debug)]
pub struct Quiver {
    pub n: u32,
    /// Least raw member `(face, point)` of each class, in canonical order.
    pub vertices: Vec<(usize, Point)>,
    /// Class index of each raw vertex, indexed by `face * per_face + position`.
    class_of: Vec<usize>,
    /// Boundary slots each class lies on.
    boundary: Vec<BTreeSet<(usize, usize)>>,
    pub q: IntMatrix,
}

pub struct VertexLabel<'a>(pub &'a (usize, Point));

impl fmt::Display for VertexLabel<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (face, (i, j, k)) = self.0;
        write!(f, "f{face}({i},{j},{k})")
    }
}

impl Quiver {
    pub fn build(t: &Triangulation) -> Result<Self> {
        t.validate()?;
        let n = t.n;
        let pts = face_vertices(n);
        let per = pts.len();
        let idx = |f: usize, p: Point| f * per + pts.binary_search(&p).expect("small vertex");
        let mut parent: Vec<usize> = (0..t.faces * per).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for g in &t.gluings {
            for s in 1..n {
                let a = find(&mut parent, idx(g[0], slot_vertex(g[1], s, n)));
                let b = find(&mut parent, idx(g[2], slot_vertex(g[3], n - s, n)));
                if a != b {
                    let (lo, hi) = (a.min(b), a.max(b));
                    parent[hi] = lo;
                }
            }
        }
        let roots: Vec<usize> = (0..parent.len()).map(|x| find(&mut parent, x)).collect();
        let mut reps: Vec<usize> = roots.clone();
        reps.sort_unstable();
        reps.dedup();
        let class_of: Vec<usize> = roots.iter().map(|r| reps.binary_search(r).unwrap()).collect();
        let vertices: Vec<(usize, Point)> = reps.iter().map(|&r| (r / per, pts[r % per])).collect();
        let m = vertices.len();
        let mut q = vec![vec![0i64; m]; m];
        let arrows = face_arrows(n);
        for f in 0..t.faces {
            for &(a, b, w) in &arrows {
                let (ca, cb) = (class_of[idx(f, a)], class_of[idx(f, b)]);
                q[ca][cb] += w;
                q[cb][ca] -= w;
            }
        }
        let mut boundary = vec![BTreeSet::new(); m];
        for (f, s) in t.boundary_slots() {
            for pos in 1..n {
                boundary[class_of[idx(f, slot_vertex(s, pos, n))]].insert((f, s));
            }
        }
        Ok(Self {
            n,
            vertices,
            class_of,
            boundary,
            q,
        })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Class index of a raw vertex.
    pub fn class(&self, face: usize, p: Point) -> usize {
        let pts = face_vertices(self.n);
        self.class_of[face * pts.len() + pts.binary_search(&p).expect("small vertex")]
    }

    pub fn labels(&self) -> Vec<String> {
        self.vertices.iter().map(|v| VertexLabel(v).to_string()).collect()
    }

    fn same_boundary_edge(&self, a: usize, b: usize) -> bool {
        self.boundary[a].intersection(&self.boundary[b]).next().is_some()
    }

    /// `H(v, v') = -Q(v, v')/2` unless `v, v'` share a boundary edge, where it
    /// is 1 on the diagonal, -1 along an arrow `v -> v'` and 0 otherwise.
    pub fn hmatrix(&self) -> Result<IntMatrix> {
        let m = self.len();
        let mut h = vec![vec![0i64; m]; m];
        for a in 0..m {
            for b in 0..m {
                h[a][b] = if self.same_boundary_edge(a, b) {
                    if a == b {
                        1
                    } else if self.q[a][b] == 1 {
                        -1
                    } else {
                        0
                    }
                } else {
                    if self.q[a][b] % 2 != 0 {
                        return Err(Error::Surface(format!(
                            "odd entry Q({}, {}) = {} off the boundary",
                            VertexLabel(&self.vertices[a]),
                            VertexLabel(&self.vertices[b]),
                            self.q[a][b]
                        )));
                    }
                    -self.q[a][b] / 2
                };
            }
        }
        Ok(h)
    }

    pub fn kmatrix(&self) -> Result<IntMatrix> {
        n_inverse(&self.hmatrix()?, self.n)
    }

    pub fn matrices(&self) -> Result<QuiverMatrices> {
        let h = self.hmatrix()?;
        let k = n_inverse(&h, self.n)?;
        let p = congruence(&k, &self.q);
        Ok(QuiverMatrices {
            vertices: self.labels(),
            q: self.q.clone(),
            h,
            k,
            p,
        })
    }
}

/// `K = n H^{-1}`, required to be integral.
pub fn n_inverse(h: &IntMatrix, n: u32) -> Result<IntMatrix> {
    let inv = linalg::inverse(&linalg::from_ints(h)).ok_or(Error::Singular)?;
    let scaled: linalg::RatMatrix = inv
        .into_iter()
        .map(|r| r.into_iter().map(|v| v * linalg::rat(n)).collect())
        .collect();
    let ints = linalg::to_integer(&scaled).map_err(|(i, j)| Error::NonIntegral(i, j))?;
    Ok(ints
        .into_iter()
        .map(|r| r.into_iter().map(|v: BigInt| v.to_i64().expect("small entry")).collect())
        .collect())
}

pub fn int_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| (0..cols).map(|j| row.iter().zip(b).map(|(x, brow)| x * brow[j]).sum()).collect())
        .collect()
}

pub fn int_transpose(a: &IntMatrix) -> IntMatrix {
    let cols = a.first().map_or(0, |r| r.len());
    (0..cols).map(|j| a.iter().map(|r| r[j]).collect()).collect()
}

/// `K Q K^T`.
pub fn congruence(k: &IntMatrix, q: &IntMatrix) -> IntMatrix {
    int_mul(&int_mul(k, q), &int_transpose(k))
}

pub fn is_scalar_identity(a: &IntMatrix, c: i64) -> bool {
    a.iter()
        .enumerate()
        .all(|(i, r)| r.iter().enumerate().all(|(j, &v)| v == if i == j { c } else { 0 }))
}

pub fn is_antisymmetric(a: &IntMatrix) -> bool {
    a.iter()
        .enumerate()
        .all(|(i, r)| r.iter().enumerate().all(|(j, &v)| v == -a[j][i]))
}

#[derive(Clone, Debug, Serialize)]
pub struct QuiverMatrices {
    pub vertices: Vec<String>,
    #[serde(rename = "Q")]
    pub q: IntMatrix,
    #[serde(rename = "H")]
    pub h: IntMatrix,
    #[serde(rename = "K")]
    pub k: IntMatrix,
    #[serde(rename = "P")]
    pub p: IntMatrix,
}

impl QuiverMatrices {
    /// JSON object restricted to the matrices named in `emit` (letters of `QHKP`).
    pub fn to_json_filtered(&self, emit: &str) -> Result<serde_json::Value> {
        let mut v = serde_json::to_value(self)?;
        let obj = v.as_object_mut().unwrap();
        for key in ["Q", "H", "K", "P"] {
            if !emit.contains(key) {
                obj.remove(key);
            }
        }
        Ok(v)
    }
}

/// A single triangle's vertices, arrows and `Q`.
pub fn triangle_quiver(n: u32) -> Result<(Vec<Point>, Vec<(Point, Point, i64)>, IntMatrix)> {
    let q = Quiver::build(&Triangulation::new(n, 1, vec![])?)?;
    Ok((face_vertices(n), face_arrows(n), q.q))
}

/// Extended vertex sets after attaching one triangle per boundary slot
/// along its slot 1, and the matrices `H` (restricted to `V x V'`) and `K`.
#[derive(Clone, Debug, Serialize)]
pub struct Extension {
    pub faces: usize,
    #[serde(rename = "V")]
    pub v: Vec<String>,
    #[serde(rename = "V_prime")]
    pub v_prime: Vec<String>,
    #[serde(rename = "H")]
    pub h: IntMatrix,
    #[serde(rename = "K")]
    pub k: IntMatrix,
    /// Whether `H` agrees with `-Q/2` restricted to `V x V'`.
    pub h_is_half_q: bool,
}

pub fn extend(t: &Triangulation) -> Result<Extension> {
    let bslots = t.boundary_slots();
    if bslots.is_empty() {
        return Err(Error::Surface("closed surface cannot be extended".into()));
    }
    let mut gluings = t.gluings.clone();
    let attached: Vec<usize> = (0..bslots.len()).map(|i| t.faces + i).collect();
    for (&f_new, &(f, s)) in attached.iter().zip(&bslots) {
        gluings.push([f_new, 1, f, s]);
    }
    let ext = Triangulation::new(t.n, t.faces + bslots.len(), gluings)?;
    let quiver = Quiver::build(&ext)?;
    let h_full = quiver.hmatrix()?;
    let n = t.n;
    let on_slot = |slot: usize| -> BTreeSet<usize> {
        attached
            .iter()
            .flat_map(|&f| (1..n).map(move |pos| (f, pos)))
            .map(|(f, pos)| quiver.class(f, slot_vertex(slot, pos, n)))
            .collect()
    };
    let (e3, e2) = (on_slot(3), on_slot(2));
    let v: Vec<usize> = (0..quiver.len()).filter(|i| !e3.contains(i)).collect();
    let vp: Vec<usize> = (0..quiver.len()).filter(|i| !e2.contains(i)).collect();
    if v.len() != vp.len() {
        return Err(Error::Surface(format!("|V| = {} differs from |V'| = {}", v.len(), vp.len())));
    }
    let h: IntMatrix = v.iter().map(|&a| vp.iter().map(|&b| h_full[a][b]).collect()).collect();
    let h_is_half_q = v
        .iter()
        .zip(&h)
        .all(|(&a, row)| vp.iter().zip(row).all(|(&b, &x)| 2 * x == -quiver.q[a][b]));
    let k = n_inverse(&h, n)?;
    let labels = quiver.labels();
    Ok(Extension {
        faces: ext.faces,
        v: v.iter().map(|&i| labels[i].clone()).collect(),
        v_prime: vp.iter().map(|&i| labels[i].clone()).collect(),
        h,
        k,
        h_is_half_q,
    })
}

/// The cutting map on `X`-tori along gluing number `edge`: `x_v -> x_v` off
/// the edge and `x_v -> [x_{v'} x_{v''}]` for the two copies of an edge vertex.
#[derive(Clone, Debug)]
pub struct CuttingMap {
    pub cut: Triangulation,
    /// Rows indexed by vertices of the glued surface, columns by the cut one.
    pub k: IntMatrix,
    pub q: IntMatrix,
    pub q_cut: IntMatrix,
}

impl CuttingMap {
    /// The map as a monomial homomorphism of quantum tori; fails if
    /// `K Q_cut K^T != Q`.
    pub fn hom(&self) -> Result<MonomialHom> {
        MonomialHom::new(self.k.clone(), &self.q, &self.q_cut)
    }
}

pub fn cutting_hom_x(t: &Triangulation, edge: usize) -> Result<CuttingMap> {
    if edge >= t.gluings.len() {
        return Err(Error::Surface(format!("gluing {edge} is not an interior edge")));
    }
    let mut gl = t.gluings.clone();
    gl.remove(edge);
    let cut = Triangulation::new(t.n, t.faces, gl)?;
    let whole = Quiver::build(t)?;
    let parts = Quiver::build(&cut)?;
    let pts = face_vertices(t.n);
    let mut k = vec![vec![0i64; parts.len()]; whole.len()];
    let mut seen = vec![false; whole.len()];
    for f in 0..t.faces {
        for &p in &pts {
            let a = whole.class(f, p);
            let b = parts.class(f, p);
            // each distinct cut class inside a glued class contributes once
            if k[a][b] == 0 {
                k[a][b] = 1;
            }
            seen[a] = true;
        }
    }
    debug_assert!(seen.into_iter().all(|s| s));
    Ok(CuttingMap {
        cut,
        k,
        q: whole.q,
        q_cut: parts.q,
    })
}

/// The monomial embedding `a^k -> x^{k K}` of the torus of `P` into the torus
/// of `Q`.
pub fn psi_embedding(t: &Triangulation) -> Result<(QuiverMatrices, MonomialHom)> {
    let m = Quiver::build(t)?.matrices()?;
    let hom = MonomialHom::new(m.k.clone(), &m.p, &m.q)?;
    Ok((m, hom))
}

/// Checks `H K = n Id`, integrality of `K` and antisymmetry of `P`, and the
/// same identity for the extension when the surface has boundary. A singular
/// `H` or non-integral `K` is reported as a failure.
pub fn quiver_report(name: &str, t: &Triangulation) -> Result<Report> {
    let mut rep = Report::start(
        format!("H K = {} Id with integral K on {name}", t.n),
        "H_lambda K_lambda = n id, P = K Q K^T antisymmetric",
    )
    .param("surface", name)
    .param("n", t.n);
    let quiver = Quiver::build(t)?;
    rep.set("vertices", quiver.len());
    let mut bad = Vec::new();
    match quiver.matrices() {
        Ok(m) => {
            if !is_scalar_identity(&int_mul(&m.h, &m.k), t.n as i64) {
                bad.push("HK".to_string());
            }
            if !is_antisymmetric(&m.p) {
                bad.push("P".to_string());
            }
        }
        Err(e @ (Error::Singular | Error::NonIntegral(..) | Error::Surface(_))) => bad.push(e.to_string()),
        Err(e) => return Err(e),
    }
    if !t.boundary_slots().is_empty() {
        match extend(t) {
            Ok(ext) => {
                rep.set("extended_vertices", ext.v.len());
                if !is_scalar_identity(&int_mul(&ext.h, &ext.k), t.n as i64) {
                    bad.push("extended HK".to_string());
                }
            }
            Err(e @ (Error::Singular | Error::NonIntegral(..) | Error::Surface(_))) => {
                bad.push(format!("extended: {e}"))
            }
            Err(e) => return Err(e),
        }
    }
    let r = bad.len();
    Ok(rep.param("findings", bad).finish(Verdict::from_bool(r == 0), r))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_counts() {
        for n in 2..=6u32 {
            let (v, _, q) = triangle_quiver(n).unwrap();
            assert_eq!(v.len() as u32, (n + 1) * (n + 2) / 2 - 3);
            assert!(is_antisymmetric(&q));
        }
        let (v, arrows, q) = triangle_quiver(2).unwrap();
        assert_eq!(v, vec![(0, 1, 1), (1, 0, 1), (1, 1, 0)]);
        assert!(arrows.iter().all(|a| a.2 == 2));
        assert!(q.iter().flatten().all(|x| [0, 2, -2].contains(x)));
        assert_eq!(triangle_quiver(3).unwrap().0.len(), 7);
    }

    #[test]
    fn triangle_rank_two_golden() {
        let m = Quiver::build(&Triangulation::preset("P3", 2).unwrap()).unwrap().matrices().unwrap();
        assert_eq!(m.q, vec![vec![0, 2, -2], vec![-2, 0, 2], vec![2, -2, 0]]);
        assert_eq!(m.h, vec![vec![1, -1, 1], vec![1, 1, -1], vec![-1, 1, 1]]);
        assert_eq!(m.k, vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]);
        assert_eq!(m.p, vec![vec![0, 2, -2], vec![-2, 0, 2], vec![2, -2, 0]]);
        assert_eq!(m.vertices, vec!["f0(0,1,1)", "f0(1,0,1)", "f0(1,1,0)"]);
    }

    #[test]
    fn inverse_identity_on_presets() {
        for name in ["P3", "P4", "P5", "annulus"] {
            for n in 2..=4 {
                let t = Triangulation::preset(name, n).unwrap();
                let quiver = Quiver::build(&t).unwrap();
                let m = quiver.matrices().unwrap();
                assert!(is_scalar_identity(&int_mul(&m.h, &m.k), n as i64), "{name} n={n}");
                assert!(is_antisymmetric(&m.p));
                let disjoint = t.faces as u32 * ((n + 1) * (n + 2) / 2 - 3);
                assert_eq!(quiver.len() as u32, disjoint - t.gluings.len() as u32 * (n - 1));
            }
        }
    }

    #[test]
    fn self_glued_face_has_singular_h() {
        let t = Triangulation::new(2, 1, vec![[0, 1, 0, 2]]).unwrap();
        let q = Quiver::build(&t).unwrap();
        assert_eq!(q.len(), 2);
        assert!(is_antisymmetric(&q.q));
        assert!(matches!(q.kmatrix(), Err(Error::Singular)));
    }

    #[test]
    fn malformed_gluings() {
        assert!(Triangulation::new(2, 1, vec![[0, 1, 0, 1]]).is_err());
        assert!(Triangulation::new(2, 1, vec![[0, 4, 0, 1]]).is_err());
        assert!(Triangulation::new(2, 1, vec![[0, 1, 1, 1]]).is_err());
        assert!(Triangulation::from_json(r#"{"n":3,"faces":2,"gluings":[[0,1,1,2]]}"#).is_ok());
    }

    #[test]
    fn extension_sizes() {
        for (name, n, size) in [("P3", 2, 6), ("P3", 3, 16), ("P3", 4, 30), ("P4", 2, 9), ("P4", 3, 24)] {
            let e = extend(&Triangulation::preset(name, n).unwrap()).unwrap();
            assert_eq!(e.v.len(), size, "{name} n={n}");
            assert_eq!(e.v_prime.len(), size);
            assert!(e.h_is_half_q);
            assert!(is_scalar_identity(&int_mul(&e.h, &e.k), n as i64));
        }
        assert_eq!(extend(&Triangulation::preset("P3", 2).unwrap()).unwrap().faces, 4);
        let closed = Triangulation::new(2, 2, vec![[0, 1, 1, 1], [0, 2, 1, 3], [0, 3, 1, 2]]).unwrap();
        assert!(extend(&closed).is_err());
    }

    #[test]
    fn cutting_is_monomial() {
        for n in 2..=4 {
            let t = Triangulation::preset("annulus", n).unwrap();
            let c = cutting_hom_x(&t, 1).unwrap();
            assert!(c.hom().is_ok(), "n={n}");
            // off-edge vertices map to single generators
            let (face, p) = (0, (1, 1, n - 2));
            if n > 2 {
                let whole = Quiver::build(&t).unwrap();
                let row = &c.k[whole.class(face, p)];
                assert_eq!(row.iter().sum::<i64>(), 1);
            }
        }
        assert!(cutting_hom_x(&Triangulation::preset("P3", 2).unwrap(), 0).is_err());
    }

    #[test]
    fn psi_embedding_condition_holds() {
        for name in ["P3", "P4"] {
            for n in 2..=4 {
                assert!(psi_embedding(&Triangulation::preset(name, n).unwrap()).is_ok());
            }
        }
    }
}
