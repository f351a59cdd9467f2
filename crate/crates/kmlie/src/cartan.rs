//! Generalized Cartan matrices, diagram colorings, and type classification.
//!
//! Classification is decided exactly: a symmetrizable matrix is of finite
//! type when all leading principal minors of (a positive row-scaling of) it
//! are positive, of affine type when every proper leading minor of an
//! indecomposable piece is positive and its determinant vanishes, and
//! indefinite otherwise. Minors are computed over arbitrary-precision
//! integers, so the finite/affine boundary is decidable.

use crate::error::Error;
use crate::scalar::Rat;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Finite / affine / indefinite trichotomy.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum Kind {
    Finite,
    Affine,
    Indefinite,
}

/// A generalized Cartan matrix with node labels.
///
/// Invariants enforced on construction: `a[i][i] = 2`, `a[i][j] <= 0` for
/// `i != j`, and `a[i][j] = 0` exactly when `a[j][i] = 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Gcm {
    entries: Vec<Vec<i64>>,
    labels: Vec<String>,
}

/// Classification data for a validated matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GcmInfo {
    pub simply_laced: bool,
    pub symmetrizable: bool,
    pub kind: Kind,
    pub rank: usize,
    pub components: Vec<Vec<usize>>,
}

impl Gcm {
    /// Validate the axioms and wrap the matrix with default labels `1..n`.
    pub fn from_entries(entries: Vec<Vec<i64>>) -> Result<Self, Error> {
        let n = entries.len();
        if entries.iter().any(|row| row.len() != n) {
            return Err(Error::NonSquare);
        }
        for i in 0..n {
            if entries[i][i] != 2 {
                return Err(Error::NotGcm(i, i, "diagonal entry must be 2"));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if entries[i][j] > 0 {
                    return Err(Error::NotGcm(i, j, "off-diagonal entry must be <= 0"));
                }
                if (entries[i][j] == 0) != (entries[j][i] == 0) {
                    return Err(Error::NotGcm(i, j, "asymmetric zero pattern"));
                }
            }
        }
        let labels = (1..=n).map(|i| i.to_string()).collect();
        Ok(Gcm { entries, labels })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n());
        self.labels = labels;
        self
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &Vec<Vec<i64>> {
        &self.entries
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(move |&j| j != i && self.entries[i][j] != 0)
    }

    pub fn is_simply_laced(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| (0..n).all(|j| i == j || matches!(self.entries[i][j], 0 | -1)))
    }

    /// Connected components of the underlying diagram, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(i) = stack.pop() {
                comp.push(i);
                for j in self.neighbors(i) {
                    if !seen[j] {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Positive diagonal symmetrizer `d` with `d_i a_ij = d_j a_ji`, when one exists.
    pub fn symmetrizer(&self) -> Option<Vec<Rat>> {
        let n = self.n();
        let mut d: Vec<Option<Rat>> = vec![None; n];
        for comp in self.components() {
            let start = comp[0];
            d[start] = Some(Rat::one());
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                let di = d[i].clone().expect("visited");
                for j in self.neighbors(i) {
                    if d[j].is_none() {
                        // d_j = d_i * a_ij / a_ji, positive since both entries are negative
                        let ratio = Rat::new(BigInt::from(self.a(i, j)), BigInt::from(self.a(j, i)));
                        d[j] = Some(&di * ratio);
                        stack.push(j);
                    }
                }
            }
        }
        let d: Vec<Rat> = d.into_iter().map(|x| x.expect("all visited")).collect();
        for i in 0..n {
            for j in 0..n {
                if &d[i] * Rat::from_integer(BigInt::from(self.a(i, j)))
                    != &d[j] * Rat::from_integer(BigInt::from(self.a(j, i)))
                {
                    return None;
                }
            }
        }
        Some(d)
    }

    /// Classify the matrix: laced-ness, symmetrizability, type, rank, components.
    pub fn info(&self) -> GcmInfo {
        let components = self.components();
        let symmetrizable = self.symmetrizer().is_some();
        let simply_laced = self.is_simply_laced();
        let kind = if !symmetrizable {
            // Finite and affine matrices are always symmetrizable.
            Kind::Indefinite
        } else {
            let mut all_finite = true;
            let mut all_affine = true;
            for comp in &components {
                match classify_component(self, comp) {
                    Kind::Finite => all_affine = false,
                    Kind::Affine => all_finite = false,
                    Kind::Indefinite => {
                        all_finite = false;
                        all_affine = false;
                    }
                }
            }
            if all_finite {
                Kind::Finite
            } else if all_affine {
                Kind::Affine
            } else {
                Kind::Indefinite
            }
        };
        GcmInfo {
            simply_laced,
            symmetrizable,
            kind,
            rank: int_rank(&self.entries),
            components,
        }
    }

    /// The sub-matrix on the given (sorted) node set, labels carried over.
    pub fn submatrix(&self, nodes: &[usize]) -> Gcm {
        let entries = nodes
            .iter()
            .map(|&i| nodes.iter().map(|&j| self.entries[i][j]).collect())
            .collect();
        let labels = nodes.iter().map(|&i| self.labels[i].clone()).collect();
        Gcm::from_entries(entries)
            .expect("principal submatrix of a GCM is a GCM")
            .with_labels(labels)
    }
}

/// Per-component classification via leading principal minors.
///
/// For an indecomposable symmetrizable piece the sign sequence decides:
/// all positive = finite; proper minors positive, determinant zero = affine
/// (positive semidefinite with a one-dimensional kernel); anything else is
/// indefinite. Row scaling by the positive symmetrizer does not change the
/// signs, so the minors are taken on the integer matrix itself.
fn classify_component(gcm: &Gcm, comp: &[usize]) -> Kind {
    let k = comp.len();
    let m: Vec<Vec<BigInt>> = comp
        .iter()
        .map(|&i| comp.iter().map(|&j| BigInt::from(gcm.a(i, j))).collect())
        .collect();
    for size in 1..=k {
        let lead: Vec<Vec<BigInt>> = (0..size).map(|r| m[r][0..size].to_vec()).collect();
        let det = int_det(lead);
        if det.is_positive() {
            continue;
        }
        if det.is_zero() && size == k {
            return Kind::Affine;
        }
        return Kind::Indefinite;
    }
    Kind::Finite
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub(crate) fn int_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign_flip = false;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(p) => {
                    m.swap(k, p);
                    sign_flip = !sign_flip;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}

fn int_rank(entries: &[Vec<i64>]) -> usize {
    use crate::linalg::{RowSpace, SparseVec};
    use crate::scalar::rat_int;
    let mut space: RowSpace<Rat> = RowSpace::new();
    for row in entries {
        let v: SparseVec<Rat> = row
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(j, &x)| (j, rat_int(x)))
            .collect();
        space.insert(v);
    }
    space.dim()
}

/// Validate a raw integer matrix and classify it.
pub fn validate_gcm(matrix: &[Vec<i64>]) -> Result<GcmInfo, Error> {
    Ok(Gcm::from_entries(matrix.to_vec())?.info())
}

/// Named diagrams: `A<n>`, `D<n>` (n >= 4), `E6`..`E8`, `E10`, and the affine
/// extensions `A<n>~`, `D<n>~`, `E8~` (alias `E9`).
///
/// Nodes are numbered along the chain; the branch node of `D<n>`/`E<n>`
/// attaches to node `n-2` resp. `n-3`, and E10 carries the tenth node on
/// node 7 of its A9 chain. Affine extensions put the extending node first,
/// labeled `0`.
pub fn named_gcm(name: &str) -> Result<Gcm, Error> {
    let name = name.trim();
    if name == "E9" {
        return affine_extension(&named_gcm("E8")?);
    }
    let (base, affine) = match name.strip_suffix('~') {
        Some(b) => (b, true),
        None => (name, false),
    };
    let (family, digits) = base.split_at(1);
    let n: usize = digits.parse().map_err(|_| Error::UnknownName(name.into()))?;
    let gcm = match family {
        "A" if n >= 1 => chain_gcm(n),
        "D" if n >= 4 => branch_gcm(n, n - 2),
        "E" if (6..=8).contains(&n) => branch_gcm(n, n - 3),
        "E" if n == 10 => branch_gcm(10, 7),
        _ => return Err(Error::UnknownName(name.into())),
    };
    if affine {
        affine_extension(&gcm)
    } else {
        Ok(gcm)
    }
}

fn chain_gcm(n: usize) -> Gcm {
    let mut entries = vec![vec![0i64; n]; n];
    for i in 0..n {
        entries[i][i] = 2;
        if i + 1 < n {
            entries[i][i + 1] = -1;
            entries[i + 1][i] = -1;
        }
    }
    Gcm::from_entries(entries).expect("chain is a GCM")
}

/// Chain of `n - 1` nodes with node `n` attached to node `attach` (1-based).
fn branch_gcm(n: usize, attach: usize) -> Gcm {
    let mut gcm = chain_gcm(n);
    gcm.entries[n - 1][n - 2] = 0;
    gcm.entries[n - 2][n - 1] = 0;
    gcm.entries[n - 1][attach - 1] = -1;
    gcm.entries[attach - 1][n - 1] = -1;
    gcm
}

/// The untwisted affine extension of a connected, finite, simply-laced
/// diagram: node 0 first, paired against the rest by `-(θ|α_j)` where θ is
/// the highest root.
pub fn affine_extension(gcm: &Gcm) -> Result<Gcm, Error> {
    let info = gcm.info();
    if info.kind != Kind::Finite {
        return Err(Error::NotFiniteType);
    }
    if !info.simply_laced {
        return Err(Error::NotSimplyLaced);
    }
    if !gcm.is_connected() {
        return Err(Error::NotConnected);
    }
    let system = crate::rootsys::enumerate_finite(gcm)?;
    let theta = system.highest_root();
    let n = gcm.n();
    let mut entries = vec![vec![0i64; n + 1]; n + 1];
    entries[0][0] = 2;
    for j in 0..n {
        let pairing = crate::rootsys::bilinear_form(gcm, theta, &crate::rootsys::Root::simple(n, j))
            .expect("dimensions match");
        let p = pairing.to_integer();
        let p: i64 = i64::try_from(i128::try_from(p.clone()).expect("small pairing"))
            .expect("small pairing");
        entries[0][j + 1] = -p;
        entries[j + 1][0] = -p;
    }
    for i in 0..n {
        for j in 0..n {
            entries[i + 1][j + 1] = gcm.a(i, j);
        }
    }
    let labels = (0..=n).map(|i| format!("{i}")).collect();
    Ok(Gcm::from_entries(entries)?.with_labels(labels))
}

/// A node coloring: `-1` is white, `+1` is black.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coloring {
    signs: Vec<i8>,
}

impl Coloring {
    pub fn new(signs: Vec<i8>) -> Result<Self, Error> {
        if signs.iter().any(|s| *s != 1 && *s != -1) {
            return Err(Error::LengthMismatch);
        }
        Ok(Coloring { signs })
    }

    /// Coloring matching a given diagram size.
    pub fn for_gcm(gcm: &Gcm, signs: Vec<i8>) -> Result<Self, Error> {
        if signs.len() != gcm.n() {
            return Err(Error::LengthMismatch);
        }
        Coloring::new(signs)
    }

    pub fn all_white(n: usize) -> Self {
        Coloring { signs: vec![-1; n] }
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn rho(&self, i: usize) -> i64 {
        self.signs[i] as i64
    }

    pub fn is_white(&self, i: usize) -> bool {
        self.signs[i] == -1
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn describe(&self) -> String {
        let parts: Vec<&str> = self
            .signs
            .iter()
            .map(|&s| if s == -1 { "white" } else { "black" })
            .collect();
        format!("({})", parts.join(", "))
    }
}

/// Node sets whose permutations were checked to leave classification stable.
pub fn permuted(gcm: &Gcm, perm: &[usize]) -> Result<Gcm, Error> {
    let n = gcm.n();
    let distinct: BTreeSet<usize> = perm.iter().copied().collect();
    if perm.len() != n || distinct.len() != n || perm.iter().any(|&i| i >= n) {
        return Err(Error::DimensionMismatch);
    }
    let entries = perm
        .iter()
        .map(|&i| perm.iter().map(|&j| gcm.a(i, j)).collect())
        .collect();
    Gcm::from_entries(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_is_finite_simply_laced() {
        let info = validate_gcm(&[vec![2, -1], vec![-1, 2]]).unwrap();
        assert!(info.simply_laced);
        assert!(info.symmetrizable);
        assert_eq!(info.kind, Kind::Finite);
        assert_eq!(info.rank, 2);
    }

    #[test]
    fn a3_tilde_matrix_is_affine() {
        let m = vec![
            vec![2, -1, 0, -1],
            vec![-1, 2, -1, 0],
            vec![0, -1, 2, -1],
            vec![-1, 0, -1, 2],
        ];
        let info = validate_gcm(&m).unwrap();
        assert!(info.simply_laced);
        assert_eq!(info.kind, Kind::Affine);
        assert_eq!(info.rank, 3);
        // Catalog agrees with the explicit matrix.
        assert_eq!(named_gcm("A3~").unwrap().entries(), &m);
    }

    #[test]
    fn asymmetric_zero_pattern_is_rejected() {
        let err = validate_gcm(&[vec![2, -1], vec![0, 2]]).unwrap_err();
        assert_eq!(err, Error::NotGcm(0, 1, "asymmetric zero pattern"));
        assert_eq!(validate_gcm(&[vec![2, -1]]).unwrap_err(), Error::NonSquare);
    }

    #[test]
    fn named_catalog_basics() {
        assert_eq!(named_gcm("A1").unwrap().entries(), &vec![vec![2]]);
        let e10 = named_gcm("E10").unwrap();
        assert_eq!(e10.n(), 10);
        assert_eq!(e10.a(6, 9), -1);
        assert_eq!(e10.a(9, 6), -1);
        assert_eq!(e10.info().kind, Kind::Indefinite);
        assert!(named_gcm("B3").is_err());
        assert!(named_gcm("E5").is_err());

        let e9 = named_gcm("E9").unwrap();
        assert_eq!(e9.n(), 9);
        assert_eq!(e9.info().kind, Kind::Affine);
        assert_eq!(e9.entries(), named_gcm("E8~").unwrap().entries());
    }

    #[test]
    fn affine_extension_of_a1_doubles_the_bond() {
        let a1t = affine_extension(&named_gcm("A1").unwrap()).unwrap();
        assert_eq!(a1t.entries(), &vec![vec![2, -2], vec![-2, 2]]);
        assert_eq!(a1t.info().kind, Kind::Affine);
        assert!(!a1t.is_simply_laced());
    }

    #[test]
    fn every_finite_catalog_entry_extends_to_affine() {
        for name in ["A1", "A2", "A3", "A7", "D4", "D5", "E6", "E7", "E8"] {
            let g = named_gcm(name).unwrap();
            assert_eq!(g.info().kind, Kind::Finite, "{name}");
            let ext = affine_extension(&g).unwrap();
            assert_eq!(ext.info().kind, Kind::Affine, "{name}~");
            assert!(ext.symmetrizer().is_some());
        }
    }

    #[test]
    fn classification_is_permutation_invariant() {
        for name in ["A4", "D5", "E7", "E10", "A3~"] {
            let g = named_gcm(name).unwrap();
            let n = g.n();
            // A fixed scrambling, plus the reversal.
            let mut perm: Vec<usize> = (0..n).collect();
            perm.rotate_left(2 % n);
            perm.swap(0, n - 1);
            let rev: Vec<usize> = (0..n).rev().collect();
            for p in [perm, rev] {
                assert_eq!(permuted(&g, &p).unwrap().info().kind, g.info().kind, "{name}");
            }
        }
    }

    #[test]
    fn simply_laced_symmetrizer_is_identity() {
        for name in ["A5", "D4", "E8", "E10", "A2~"] {
            let g = named_gcm(name).unwrap();
            let d = g.symmetrizer().unwrap();
            assert!(d.iter().all(|x| *x == Rat::one()), "{name}");
        }
    }

    #[test]
    fn non_symmetrizable_is_indefinite() {
        // Zero pattern is symmetric but no positive diagonal fixes the cycle.
        let m = vec![
            vec![2, -1, 0, -2],
            vec![-1, 2, -1, 0],
            vec![0, -1, 2, -1],
            vec![-1, 0, -1, 2],
        ];
        let info = validate_gcm(&m).unwrap();
        assert!(!info.symmetrizable);
        assert_eq!(info.kind, Kind::Indefinite);
    }

    #[test]
    fn disconnected_components_are_reported() {
        let m = vec![vec![2, 0, 0], vec![0, 2, -1], vec![0, -1, 2]];
        let info = validate_gcm(&m).unwrap();
        assert_eq!(info.components, vec![vec![0], vec![1, 2]]);
        assert_eq!(info.kind, Kind::Finite);
    }

    #[test]
    fn multiply_laced_classification() {
        // C2 and G2 are finite; the 2x2 with product 4 is affine; product 5 indefinite.
        assert_eq!(
            validate_gcm(&[vec![2, -2], vec![-1, 2]]).unwrap().kind,
            Kind::Finite
        );
        assert_eq!(
            validate_gcm(&[vec![2, -3], vec![-1, 2]]).unwrap().kind,
            Kind::Finite
        );
        assert_eq!(
            validate_gcm(&[vec![2, -2], vec![-2, 2]]).unwrap().kind,
            Kind::Affine
        );
        assert_eq!(
            validate_gcm(&[vec![2, -5], vec![-1, 2]]).unwrap().kind,
            Kind::Indefinite
        );
    }
}
