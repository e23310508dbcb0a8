//! Finite groups, signed-permutation representations on lp^n, and the
//! projection onto the invariant vectors.
//!
//! Representations are restricted to signed permutations: for p != 2 these
//! are exactly the linear isometries of lp^n, so at this scale nothing is
//! lost, and isometry becomes a bit-exact property of the norm code. The
//! invariant projection is computed by averaging the group images, the
//! finite-group form of the invariant mean; no eigen-solving is involved.

use crate::dense::DenseVector;
use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::operator::OperatorMatrix;

/// A finite group given by its Cayley table. Construction validates the
/// table exhaustively: entries in range, Latin square, identity, two-sided
/// inverses, and associativity over all O(n^3) triples, reporting the first
/// failing triple.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteGroup {
    order: usize,
    cayley: Vec<usize>, // row-major
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    pub fn from_cayley(table: Vec<Vec<usize>>) -> Result<FiniteGroup> {
        let order = table.len();
        if order == 0 {
            return Err(Error::EmptyGroup);
        }
        let mut cayley = Vec::with_capacity(order * order);
        for (row, r) in table.iter().enumerate() {
            if r.len() != order {
                return Err(Error::NotSquare {
                    rows: order,
                    cols: r.len(),
                });
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= order {
                    return Err(Error::CayleyEntryOutOfRange {
                        row,
                        col,
                        value,
                        order,
                    });
                }
                cayley.push(value);
            }
        }

        // Latin square: every row and column hits each element once.
        for i in 0..order {
            let mut seen_row = vec![false; order];
            let mut seen_col = vec![false; order];
            for j in 0..order {
                let r = cayley[i * order + j];
                let c = cayley[j * order + i];
                if seen_row[r] {
                    return Err(Error::NotLatinSquare {
                        axis: "row",
                        index: i,
                    });
                }
                if seen_col[c] {
                    return Err(Error::NotLatinSquare {
                        axis: "column",
                        index: i,
                    });
                }
                seen_row[r] = true;
                seen_col[c] = true;
            }
        }

        let mul = |a: usize, b: usize| cayley[a * order + b];

        let identity = (0..order)
            .find(|&e| (0..order).all(|g| mul(e, g) == g && mul(g, e) == g))
            .ok_or(Error::NoIdentity)?;

        let inverse = (0..order)
            .map(|g| {
                (0..order)
                    .find(|&h| mul(g, h) == identity && mul(h, g) == identity)
                    .ok_or(Error::NoInverse { element: g })
            })
            .collect::<Result<Vec<_>>>()?;

        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(Error::NotAssociative { a, b, c });
                    }
                }
            }
        }

        Ok(FiniteGroup {
            order,
            cayley,
            identity,
            inverse,
        })
    }

    /// The cyclic group Z_n with its addition table.
    pub fn cyclic(n: usize) -> Result<FiniteGroup> {
        if n == 0 {
            return Err(Error::EmptyGroup);
        }
        let table = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        FiniteGroup::from_cayley(table)
    }

    /// The direct product; element (a, b) is encoded as a * |B| + b.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
        let n = a.order * b.order;
        let table = (0..n)
            .map(|g| {
                (0..n)
                    .map(|h| {
                        let (ga, gb) = (g / b.order, g % b.order);
                        let (ha, hb) = (h / b.order, h % b.order);
                        a.mul(ga, ha) * b.order + b.mul(gb, hb)
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::from_cayley(table)
    }

    /// Parses the plain-text table format: first line the order n, then n
    /// lines of n whitespace-separated element indices in 0..n. Blank lines
    /// and lines starting with '#' are skipped.
    pub fn from_cayley_text(text: &str) -> Result<FiniteGroup> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (line_no, first) = lines.next().ok_or(Error::CayleyParse {
            line: 0,
            message: "empty input".into(),
        })?;
        let order: usize = first.parse().map_err(|_| Error::CayleyParse {
            line: line_no,
            message: format!("expected the group order, got '{first}'"),
        })?;

        let mut table = Vec::with_capacity(order);
        for _ in 0..order {
            let (line_no, line) = lines.next().ok_or(Error::CayleyParse {
                line: 0,
                message: format!("expected {order} table rows, input ended early"),
            })?;
            let row: Vec<usize> = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse().map_err(|_| Error::CayleyParse {
                        line: line_no,
                        message: format!("bad element index '{tok}'"),
                    })
                })
                .collect::<Result<_>>()?;
            if row.len() != order {
                return Err(Error::CayleyParse {
                    line: line_no,
                    message: format!("expected {order} entries, got {}", row.len()),
                });
            }
            table.push(row);
        }
        FiniteGroup::from_cayley(table)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.cayley[g * self.order + h]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }
}

/// A permutation with signs: e_j maps to signs[j] * e_{perm[j]}. These act
/// isometrically on lp^n for every p, exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    signs: Vec<f64>,
}

impl SignedPermutation {
    pub fn new(perm: Vec<usize>, signs: Vec<f64>) -> Result<SignedPermutation> {
        let n = perm.len();
        if n == 0 {
            return Err(Error::BadSignedPermutation("empty".into()));
        }
        if signs.len() != n {
            return Err(Error::BadSignedPermutation(format!(
                "{} signs for {} points",
                signs.len(),
                n
            )));
        }
        let mut seen = vec![false; n];
        for &target in &perm {
            if target >= n || seen[target] {
                return Err(Error::BadSignedPermutation(
                    "index map is not a permutation".into(),
                ));
            }
            seen[target] = true;
        }
        for &s in &signs {
            if s != 1.0 && s != -1.0 {
                return Err(Error::BadSignedPermutation(format!("sign {s} is not ±1")));
            }
        }
        Ok(SignedPermutation { perm, signs })
    }

    pub fn identity(n: usize) -> SignedPermutation {
        SignedPermutation {
            perm: (0..n).collect(),
            signs: vec![1.0; n],
        }
    }

    pub fn degree(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[f64] {
        &self.signs
    }

    pub fn apply_slice(&self, x: &[f64]) -> Vec<f64> {
        debug_assert_eq!(x.len(), self.degree());
        let mut out = vec![0.0; x.len()];
        for (j, (&target, &sign)) in self.perm.iter().zip(&self.signs).enumerate() {
            out[target] = sign * x[j];
        }
        out
    }

    pub fn apply(&self, v: &DenseVector) -> Result<DenseVector> {
        if v.dim() != self.degree() {
            return Err(Error::DimensionMismatch {
                left: self.degree(),
                right: v.dim(),
            });
        }
        DenseVector::new(self.apply_slice(v.entries()), v.ambient())
    }

    /// self after other: (self ∘ other)(e_j).
    pub fn compose(&self, other: &SignedPermutation) -> Result<SignedPermutation> {
        if self.degree() != other.degree() {
            return Err(Error::DimensionMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        let n = self.degree();
        let mut perm = vec![0; n];
        let mut signs = vec![0.0; n];
        for j in 0..n {
            let mid = other.perm[j];
            perm[j] = self.perm[mid];
            signs[j] = other.signs[j] * self.signs[mid];
        }
        Ok(SignedPermutation { perm, signs })
    }

    /// For a signed permutation matrix the transpose equals the inverse:
    /// both send e_{perm[j]} back to signs[j] * e_j.
    fn flip(&self) -> SignedPermutation {
        let n = self.degree();
        let mut perm = vec![0; n];
        let mut signs = vec![0.0; n];
        for j in 0..n {
            perm[self.perm[j]] = j;
            signs[self.perm[j]] = self.signs[j];
        }
        SignedPermutation { perm, signs }
    }

    pub fn inverse(&self) -> SignedPermutation {
        self.flip()
    }

    pub fn transpose(&self) -> SignedPermutation {
        self.flip()
    }

    /// The dual-space image (S*)^{-1} of the isometry S; for signed
    /// permutations this lands back on S itself.
    pub fn dual_isometry(&self) -> SignedPermutation {
        self.transpose().inverse()
    }

    pub fn to_matrix(&self, ambient: Exponent) -> OperatorMatrix {
        let n = self.degree();
        let mut rows = vec![vec![0.0; n]; n];
        for j in 0..n {
            rows[self.perm[j]][j] = self.signs[j];
        }
        OperatorMatrix::from_rows(rows, ambient).expect("valid by construction")
    }
}

/// A homomorphism from a finite group into signed permutations of lp^n.
/// Construction checks the homomorphism property over all pairs.
#[derive(Debug, Clone)]
pub struct SignedPermRep {
    group: FiniteGroup,
    degree: usize,
    images: Vec<SignedPermutation>,
    ambient: Exponent,
}

impl SignedPermRep {
    pub fn new(
        group: FiniteGroup,
        images: Vec<SignedPermutation>,
        ambient: Exponent,
    ) -> Result<SignedPermRep> {
        if images.len() != group.order() {
            return Err(Error::WrongImageCount {
                got: images.len(),
                expected: group.order(),
            });
        }
        let degree = images[0].degree();
        for image in &images {
            if image.degree() != degree {
                return Err(Error::DimensionMismatch {
                    left: degree,
                    right: image.degree(),
                });
            }
        }
        if images[group.identity()] != SignedPermutation::identity(degree) {
            return Err(Error::NotHomomorphism {
                g: group.identity(),
                h: group.identity(),
            });
        }
        for g in 0..group.order() {
            for h in 0..group.order() {
                let composed = images[g].compose(&images[h])?;
                if images[group.mul(g, h)] != composed {
                    return Err(Error::NotHomomorphism { g, h });
                }
            }
        }
        Ok(SignedPermRep {
            group,
            degree,
            images,
            ambient,
        })
    }

    /// The left regular representation on lp(G): g permutes the basis by
    /// h -> gh, all signs +1.
    pub fn regular(group: &FiniteGroup, ambient: Exponent) -> SignedPermRep {
        let order = group.order();
        let images = (0..order)
            .map(|g| SignedPermutation {
                perm: (0..order).map(|h| group.mul(g, h)).collect(),
                signs: vec![1.0; order],
            })
            .collect();
        SignedPermRep {
            group: group.clone(),
            degree: order,
            images,
            ambient,
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn ambient(&self) -> Exponent {
        self.ambient
    }

    pub fn image(&self, g: usize) -> &SignedPermutation {
        &self.images[g]
    }

    /// Orbits of the underlying (unsigned) permutation action, each listed
    /// by ascending representative.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut orbits = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut cursor = 0;
            while cursor < orbit.len() {
                let idx = orbit[cursor];
                for image in &self.images {
                    let to = image.perm[idx];
                    if !seen[to] {
                        seen[to] = true;
                        orbit.push(to);
                    }
                }
                cursor += 1;
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }

    /// A canonical basis of the fixed space: one ±1 indicator per orbit
    /// whose signs propagate consistently; orbits with a sign obstruction
    /// contribute nothing.
    pub fn fixed_basis(&self) -> Vec<DenseVector> {
        let mut basis = Vec::new();
        for orbit in self.orbits() {
            let mut values = vec![0.0; self.degree];
            values[orbit[0]] = 1.0;
            let mut stack = vec![orbit[0]];
            let mut consistent = true;
            while let Some(idx) = stack.pop() {
                for image in &self.images {
                    let to = image.perm[idx];
                    let expected = image.signs[idx] * values[idx];
                    if values[to] == 0.0 {
                        values[to] = expected;
                        stack.push(to);
                    } else if values[to] != expected {
                        consistent = false;
                    }
                }
                if !consistent {
                    break;
                }
            }
            if consistent {
                basis.push(DenseVector::new(values, self.ambient).expect("degree >= 1"));
            }
        }
        basis
    }

    /// The projection P onto the invariant vectors, by group averaging:
    /// P = (1/|G|) sum_g image(g). For the regular representation this is
    /// the rank-one mean operator. Also returns I - P and revalidates the
    /// projection identities (idempotence, equivariance).
    pub fn invariant_projection(&self) -> Result<ProjectionPair> {
        let n = self.degree;
        let order = self.group.order();
        // Accumulate integer counts first; each matrix entry is then a
        // single rounding of count / |G|.
        let mut counts = vec![0.0f64; n * n];
        for image in &self.images {
            for j in 0..n {
                counts[image.perm[j] * n + j] += image.signs[j];
            }
        }
        let scale = 1.0 / order as f64;
        let p_invariant =
            OperatorMatrix::from_fn(n, self.ambient, |i, j| counts[i * n + j] * scale)?;
        let complement = OperatorMatrix::identity(n, self.ambient)?.sub(&p_invariant)?;

        let pair = ProjectionPair {
            p_invariant,
            complement,
            ambient: self.ambient,
        };
        pair.validate(self)?;
        Ok(pair)
    }
}

/// The invariant projection P and its complement I - P.
#[derive(Debug, Clone)]
pub struct ProjectionPair {
    p_invariant: OperatorMatrix,
    complement: OperatorMatrix,
    ambient: Exponent,
}

impl ProjectionPair {
    pub fn p_invariant(&self) -> &OperatorMatrix {
        &self.p_invariant
    }

    pub fn complement(&self) -> &OperatorMatrix {
        &self.complement
    }

    pub fn ambient(&self) -> Exponent {
        self.ambient
    }

    /// Rank of the projection = dimension of the fixed space; exact for a
    /// projection, read off the trace.
    pub fn fixed_space_dim(&self) -> usize {
        let trace: f64 = (0..self.p_invariant.dim())
            .map(|i| self.p_invariant.entry(i, i))
            .sum();
        trace.round() as usize
    }

    fn validate(&self, rep: &SignedPermRep) -> Result<()> {
        let p2 = self.p_invariant.matmul(&self.p_invariant)?;
        let idem = p2.max_abs_diff(&self.p_invariant)?;
        if idem > 1e-12 {
            return Err(Error::BadSignedPermutation(format!(
                "averaged operator is not idempotent (residual {idem:.3e})"
            )));
        }
        for g in 0..rep.group().order() {
            let m = rep.image(g).to_matrix(self.ambient);
            let left = m.matmul(&self.p_invariant)?;
            let right = self.p_invariant.matmul(&m)?;
            if left.max_abs_diff(&self.p_invariant)? > 1e-12
                || right.max_abs_diff(&self.p_invariant)? > 1e-12
            {
                return Err(Error::NotHomomorphism { g, h: g });
            }
        }
        Ok(())
    }
}

/// Residual of the commutation of the duality map with an isometry:
/// || J(S v) - S̄ J(v) ||_q. Zero up to rounding for every signed
/// permutation and smooth exponent.
pub fn duality_equivariance_residual(s: &SignedPermutation, v: &DenseVector) -> Result<f64> {
    if v.dim() != s.degree() {
        return Err(Error::DimensionMismatch {
            left: s.degree(),
            right: v.dim(),
        });
    }
    let lhs = s.apply(v)?.duality_map()?;
    let rhs = s.dual_isometry().apply(&v.duality_map()?)?;
    Ok(lhs.sub(&rhs)?.norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: f64) -> Exponent {
        Exponent::finite(v).unwrap()
    }

    #[test]
    fn cyclic_groups() {
        let g1 = FiniteGroup::cyclic(1).unwrap();
        assert_eq!(g1.order(), 1);
        assert_eq!(g1.identity(), 0);

        let g3 = FiniteGroup::cyclic(3).unwrap();
        assert_eq!(g3.identity(), 0);
        assert_eq!(g3.inverse(1), 2);
        assert_eq!(g3.mul(2, 2), 1);

        let g6 = FiniteGroup::cyclic(6).unwrap();
        assert_eq!(g6.inverse(2), 4);

        assert!(matches!(FiniteGroup::cyclic(0), Err(Error::EmptyGroup)));
    }

    #[test]
    fn direct_product_klein() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let klein = FiniteGroup::direct_product(&z2, &z2).unwrap();
        assert_eq!(klein.order(), 4);
        // every element squares to the identity
        for g in 0..4 {
            assert_eq!(klein.mul(g, g), klein.identity());
        }
    }

    #[test]
    fn bad_tables_are_rejected_with_detail() {
        // constant row: not a Latin square
        let e = FiniteGroup::from_cayley(vec![vec![0, 0], vec![1, 0]]);
        assert!(matches!(e, Err(Error::NotLatinSquare { .. })));

        // rows fine, duplicate in a column
        let e = FiniteGroup::from_cayley(vec![vec![0, 1], vec![0, 1]]);
        assert!(matches!(
            e,
            Err(Error::NotLatinSquare { axis: "column", .. })
        ));

        // subtraction mod 3 is a Latin square with no two-sided identity
        let sub3: Vec<Vec<usize>> = (0..3)
            .map(|i: usize| (0..3).map(|j: usize| (3 + i - j) % 3).collect())
            .collect();
        assert!(matches!(
            FiniteGroup::from_cayley(sub3),
            Err(Error::NoIdentity)
        ));

        // out-of-range entry names the cell
        let e = FiniteGroup::from_cayley(vec![vec![0, 1], vec![1, 5]]);
        assert!(matches!(
            e,
            Err(Error::CayleyEntryOutOfRange {
                row: 1,
                col: 1,
                value: 5,
                ..
            })
        ));
    }

    #[test]
    fn first_failing_associativity_triple_is_reported() {
        // a Latin square with identity that is not associative:
        // the "subtraction-like" loop on 5 points
        let table: Vec<Vec<usize>> = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        match FiniteGroup::from_cayley(table) {
            Err(Error::NotAssociative { a, b, c }) => {
                // the reported triple is the lexicographically first failure
                assert_eq!((a, b, c), (1, 1, 2));
            }
            other => panic!("expected NotAssociative, got {other:?}"),
        }
    }

    #[test]
    fn cayley_text_round_trip() {
        let text = "# Z3\n3\n0 1 2\n1 2 0\n2 0 1\n";
        let g = FiniteGroup::from_cayley_text(text).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.inverse(1), 2);

        let bad = "3\n0 1 2\n1 2 x\n2 0 1\n";
        assert!(matches!(
            FiniteGroup::from_cayley_text(bad),
            Err(Error::CayleyParse { line: 3, .. })
        ));

        let short = "3\n0 1 2\n";
        assert!(matches!(
            FiniteGroup::from_cayley_text(short),
            Err(Error::CayleyParse { .. })
        ));
    }

    #[test]
    fn signed_permutation_algebra() {
        let shift = SignedPermutation::new(vec![1, 2, 0], vec![1.0, 1.0, 1.0]).unwrap();
        let v = DenseVector::new(vec![1.0, 2.0, 3.0], p(3.0)).unwrap();
        let sv = shift.apply(&v).unwrap();
        assert_eq!(sv.entries(), &[3.0, 1.0, 2.0]);

        // exact isometry at several exponents
        for q in [Exponent::ONE, Exponent::TWO, Exponent::INF, p(3.7)] {
            let w = v.with_ambient(q);
            assert_eq!(w.norm().to_bits(), shift.apply(&w).unwrap().norm().to_bits());
        }

        let inv = shift.inverse();
        assert_eq!(
            inv.compose(&shift).unwrap(),
            SignedPermutation::identity(3)
        );

        assert!(SignedPermutation::new(vec![0, 0], vec![1.0, 1.0]).is_err());
        assert!(SignedPermutation::new(vec![0, 1], vec![1.0, 0.5]).is_err());
    }

    #[test]
    fn dual_isometry_examples() {
        let id = SignedPermutation::identity(4);
        assert_eq!(id.dual_isometry(), id);

        let flip = SignedPermutation::new(vec![0, 1], vec![-1.0, 1.0]).unwrap();
        assert_eq!(flip.dual_isometry(), flip);

        let shift = SignedPermutation::new(vec![1, 2, 0], vec![1.0, 1.0, 1.0]).unwrap();
        assert_eq!(shift.dual_isometry(), shift);
        assert_eq!(shift.dual_isometry().dual_isometry(), shift);
    }

    #[test]
    fn regular_representation_shapes() {
        let g = FiniteGroup::cyclic(3).unwrap();
        let rep = SignedPermRep::regular(&g, Exponent::TWO);
        assert_eq!(rep.degree(), 3);
        // images are the three cyclic shifts
        for g_idx in 0..3 {
            let perm = rep.image(g_idx).perm();
            for h in 0..3 {
                assert_eq!(perm[h], (g_idx + h) % 3);
            }
        }

        let trivial = SignedPermRep::regular(&FiniteGroup::cyclic(1).unwrap(), p(3.0));
        assert_eq!(trivial.degree(), 1);
        assert_eq!(trivial.image(0), &SignedPermutation::identity(1));

        // validated homomorphism construction agrees
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let klein = FiniteGroup::direct_product(&z2, &z2).unwrap();
        let rep = SignedPermRep::regular(&klein, p(3.0));
        let revalidated = SignedPermRep::new(
            klein.clone(),
            (0..4).map(|g| rep.image(g).clone()).collect(),
            p(3.0),
        );
        assert!(revalidated.is_ok());
        for g in 0..4 {
            let sq = rep.image(g).compose(rep.image(g)).unwrap();
            assert_eq!(sq, SignedPermutation::identity(4));
        }
    }

    #[test]
    fn rejects_non_homomorphisms() {
        let g = FiniteGroup::cyclic(2).unwrap();
        let images = vec![
            SignedPermutation::identity(2),
            SignedPermutation::new(vec![1, 0], vec![1.0, -1.0]).unwrap(),
        ];
        // (swap with one sign flip)^2 = -identity, not a representation of Z2
        assert!(matches!(
            SignedPermRep::new(g, images, Exponent::TWO),
            Err(Error::NotHomomorphism { .. })
        ));
    }

    #[test]
    fn invariant_projection_of_regular_rep_is_the_mean() {
        let g = FiniteGroup::cyclic(3).unwrap();
        let rep = SignedPermRep::regular(&g, Exponent::INF);
        let pair = rep.invariant_projection().unwrap();
        let third = 1.0 / 3.0;
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(pair.p_invariant().entry(i, j), third);
            }
        }
        assert_eq!(pair.fixed_space_dim(), 1);
        // the regular action is transitive: one orbit, the all-ones basis
        let basis = rep.fixed_basis();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0].entries(), &[1.0, 1.0, 1.0]);
    }

    #[test]
    fn trivial_group_projection_is_identity() {
        let g = FiniteGroup::cyclic(1).unwrap();
        let rep = SignedPermRep::regular(&g, p(3.0));
        let pair = rep.invariant_projection().unwrap();
        assert_eq!(pair.p_invariant().entry(0, 0), 1.0);
        assert_eq!(pair.complement().entry(0, 0), 0.0);
        assert_eq!(pair.fixed_space_dim(), 1);
    }

    #[test]
    fn sign_flip_rep_has_no_invariants() {
        let g = FiniteGroup::cyclic(2).unwrap();
        let images = vec![
            SignedPermutation::identity(1),
            SignedPermutation::new(vec![0], vec![-1.0]).unwrap(),
        ];
        let rep = SignedPermRep::new(g, images, p(1.5)).unwrap();
        let pair = rep.invariant_projection().unwrap();
        assert_eq!(pair.p_invariant().entry(0, 0), 0.0);
        assert_eq!(pair.complement().entry(0, 0), 1.0);
        assert_eq!(pair.fixed_space_dim(), 0);
        // the single orbit carries a sign obstruction
        assert!(rep.fixed_basis().is_empty());
        assert_eq!(rep.orbits().len(), 1);
    }

    #[test]
    fn complement_of_regular_rep_annihilates_means() {
        let g = FiniteGroup::cyclic(5).unwrap();
        let rep = SignedPermRep::regular(&g, p(3.0));
        let pair = rep.invariant_projection().unwrap();
        let f = DenseVector::new(vec![0.3, -1.2, 0.9, 2.0, -0.5], p(3.0)).unwrap();
        let cf = pair.complement().apply(&f).unwrap();
        let total: f64 = cf.entries().iter().sum();
        assert!(total.abs() < 1e-12);
        // P (I - P) f = 0
        let pcf = pair.p_invariant().apply(&cf).unwrap();
        assert!(pcf.norm() < 1e-12);
    }

    #[test]
    fn equivariance_residual_examples() {
        let id = SignedPermutation::identity(3);
        let v = DenseVector::new(vec![0.4, -1.0, 2.0], p(3.0)).unwrap();
        assert_eq!(duality_equivariance_residual(&id, &v).unwrap(), 0.0);

        let shift = SignedPermutation::new(vec![1, 2, 0], vec![1.0, 1.0, 1.0]).unwrap();
        let v = DenseVector::new(vec![1.0, 2.0, 3.0], p(3.0)).unwrap();
        let r = duality_equivariance_residual(&shift, &v).unwrap();
        assert!(r <= 1e-9 * (1.0 + v.norm()));

        let flip = SignedPermutation::new(vec![0, 1], vec![-1.0, 1.0]).unwrap();
        let v = DenseVector::new(vec![1.0, 1.0], p(1.5)).unwrap();
        let r = duality_equivariance_residual(&flip, &v).unwrap();
        assert!(r <= 1e-9 * (1.0 + v.norm()));
    }
}
