//! Finitely generated abelian groups in invariant factor normal form, their
//! standard bifunctors, and homomorphisms between groups presented by
//! generators and relations.
//!
//! A group is `Z^free_rank + Z/n_1 + ... + Z/n_k` with `n_1 | n_2 | ...` and
//! every `n_i >= 2`; this normal form makes equality a plain comparison.
//! Homomorphisms are integer matrices acting on the generator presentation
//! (torsion generators first, free generators after), validated to respect
//! relations. Kernels, images and quotients reduce to lattice arithmetic in
//! [`crate::matrix`].

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::IntMatrix;

/// Finitely generated abelian group in invariant factor normal form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FgAbGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl fmt::Debug for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl FgAbGroup {
    pub fn zero() -> Self {
        FgAbGroup { free_rank: 0, torsion: Vec::new() }
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup { free_rank: rank, torsion: Vec::new() }
    }

    pub fn cyclic(n: impl Into<BigInt>) -> Self {
        let n: BigInt = n.into();
        let n = n.abs();
        if n.is_zero() {
            FgAbGroup::free(1)
        } else if n.is_one() {
            FgAbGroup::zero()
        } else {
            FgAbGroup { free_rank: 0, torsion: vec![n] }
        }
    }

    /// Normal form of an arbitrary list of cyclic orders (0 meaning `Z`).
    /// Runs the diagonal through Smith reduction to restore divisibility.
    pub fn from_cyclic_factors(factors: &[BigInt]) -> Self {
        let n = factors.len();
        let diag = IntMatrix::diagonal(n, n, factors);
        cokernel(&diag)
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        let mut o = BigInt::one();
        for t in &self.torsion {
            o *= t;
        }
        Some(o)
    }

    pub fn direct_sum(&self, other: &FgAbGroup) -> FgAbGroup {
        let mut factors: Vec<BigInt> = self.torsion.clone();
        factors.extend(other.torsion.iter().cloned());
        let mut g = FgAbGroup::from_cyclic_factors(&factors);
        g.free_rank = self.free_rank + other.free_rank;
        g
    }

    /// Number of generators in the presentation: torsion first, free after.
    pub fn num_generators(&self) -> usize {
        self.torsion.len() + self.free_rank
    }

    /// Relation matrix: columns `n_i * e_i` for each torsion generator,
    /// inside `Z^{num_generators}`.
    pub fn relations(&self) -> IntMatrix {
        let g = self.num_generators();
        let t = self.torsion.len();
        let trips: Vec<(usize, usize, BigInt)> = self
            .torsion
            .iter()
            .enumerate()
            .map(|(i, n)| (i, i, n.clone()))
            .collect();
        IntMatrix::from_triplets(g, t, trips).expect("valid relation triplets")
    }

    /// Is the whole group annihilated by `p` (an elementary abelian p-group)?
    pub fn is_elementary_p(&self, p: u64) -> bool {
        let p = BigInt::from(p);
        self.free_rank == 0 && self.torsion.iter().all(|t| *t == p)
    }

    /// Dimension as a vector space over `F_p`, when elementary; `None` else.
    pub fn elementary_p_dim(&self, p: u64) -> Option<usize> {
        if self.is_elementary_p(p) {
            Some(self.torsion.len())
        } else {
            None
        }
    }

    pub fn display(&self) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut parts: Vec<String> = Vec::new();
        if self.free_rank == 1 {
            parts.push(String::from("Z"));
        } else if self.free_rank > 1 {
            let mut s = String::new();
            let _ = write!(s, "Z^{}", self.free_rank);
            parts.push(s);
        }
        for t in &self.torsion {
            let mut s = String::new();
            let _ = write!(s, "Z/{}", t);
            parts.push(s);
        }
        parts.join(" + ")
    }

    /// Multiset of prime-power cyclic factors `(p, e, multiplicity)` of the
    /// torsion part, sorted by prime then exponent. Factoring is by trial
    /// division, fine for the desk-scale orders that occur here.
    pub fn primary_decomposition(&self) -> BTreeMap<BigInt, Vec<u32>> {
        let mut out: BTreeMap<BigInt, Vec<u32>> = BTreeMap::new();
        for t in &self.torsion {
            for (p, e) in factorize(t) {
                out.entry(p).or_default().push(e);
            }
        }
        for exps in out.values_mut() {
            exps.sort_unstable();
        }
        out
    }
}

/// Trial-division factorization of a positive integer.
pub fn factorize(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.clone();
    assert!(n.is_positive(), "factorize expects a positive integer");
    let mut out = Vec::new();
    let mut d = BigInt::from(2);
    while &d * &d <= n {
        let mut e = 0u32;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        if e > 0 {
            out.push((d.clone(), e));
        }
        d += 1;
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}

/// Cokernel of the map `Z^cols -> Z^rows` in invariant factor normal form.
pub fn cokernel(m: &IntMatrix) -> FgAbGroup {
    let diag = m.invariant_factors();
    let rank = diag.iter().filter(|d| !d.is_zero()).count();
    let torsion: Vec<BigInt> = diag
        .into_iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .collect();
    FgAbGroup { free_rank: m.rows() - rank, torsion }
}

fn cyclic_orders(g: &FgAbGroup) -> Vec<BigInt> {
    let mut v: Vec<BigInt> = g.torsion.clone();
    for _ in 0..g.free_rank {
        v.push(BigInt::zero());
    }
    v
}

fn pair_tensor(a: &BigInt, b: &BigInt) -> BigInt {
    // Z (x) Z = Z; Z (x) Z/n = Z/n; Z/m (x) Z/n = Z/gcd
    if a.is_zero() {
        b.clone()
    } else if b.is_zero() {
        a.clone()
    } else {
        a.gcd(b)
    }
}

fn pair_hom(a: &BigInt, b: &BigInt) -> BigInt {
    // Hom(Z, C_b) = C_b; Hom(Z/m, Z) = 0; Hom(Z/m, Z/n) = Z/gcd
    if a.is_zero() {
        b.clone()
    } else if b.is_zero() {
        BigInt::one()
    } else {
        a.gcd(b)
    }
}

fn pair_ext1(a: &BigInt, b: &BigInt) -> BigInt {
    // Ext(Z, -) = 0; Ext(Z/m, Z) = Z/m; Ext(Z/m, Z/n) = Z/gcd
    if a.is_zero() {
        BigInt::one()
    } else if b.is_zero() {
        a.clone()
    } else {
        a.gcd(b)
    }
}

fn pair_tor1(a: &BigInt, b: &BigInt) -> BigInt {
    // Tor(Z, -) = 0 = Tor(-, Z); Tor(Z/m, Z/n) = Z/gcd
    if a.is_zero() || b.is_zero() {
        BigInt::one()
    } else {
        a.gcd(b)
    }
}

fn bilinear(a: &FgAbGroup, b: &FgAbGroup, pair: fn(&BigInt, &BigInt) -> BigInt) -> FgAbGroup {
    let mut factors = Vec::new();
    for x in cyclic_orders(a) {
        for y in cyclic_orders(b) {
            factors.push(pair(&x, &y));
        }
    }
    FgAbGroup::from_cyclic_factors(&factors)
}

pub fn tensor_groups(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    bilinear(a, b, pair_tensor)
}

pub fn hom_groups(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    bilinear(a, b, pair_hom)
}

pub fn ext1_groups(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    bilinear(a, b, pair_ext1)
}

pub fn tor1_groups(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    bilinear(a, b, pair_tor1)
}

/// Homomorphism between groups in normal form, as an integer matrix on
/// presentation generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    pub source: FgAbGroup,
    pub target: FgAbGroup,
    pub matrix: IntMatrix,
}

impl GroupHom {
    /// Checked construction: the matrix must carry source relations into
    /// target relations.
    pub fn new(source: FgAbGroup, target: FgAbGroup, matrix: IntMatrix) -> Option<GroupHom> {
        if matrix.rows() != target.num_generators() || matrix.cols() != source.num_generators() {
            return None;
        }
        let h = GroupHom { source, target, matrix };
        if h.respects_relations() {
            Some(h)
        } else {
            None
        }
    }

    fn respects_relations(&self) -> bool {
        let img_rel = self.matrix.mul(&self.source.relations());
        let t_rel = self.target.relations();
        if t_rel.cols() == 0 {
            return img_rel.is_zero();
        }
        t_rel.lattice_contains(&img_rel)
    }

    pub fn identity(g: &FgAbGroup) -> GroupHom {
        GroupHom {
            source: g.clone(),
            target: g.clone(),
            matrix: IntMatrix::identity(g.num_generators()),
        }
    }

    pub fn zero(source: &FgAbGroup, target: &FgAbGroup) -> GroupHom {
        GroupHom {
            source: source.clone(),
            target: target.clone(),
            matrix: IntMatrix::zero(target.num_generators(), source.num_generators()),
        }
    }

    pub fn compose(&self, inner: &GroupHom) -> GroupHom {
        assert_eq!(inner.target, self.source, "composition mismatch");
        GroupHom {
            source: inner.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&inner.matrix),
        }
    }

    /// Augmented lattice `[matrix | target relations]`, the full image of the
    /// generator lattice inside the target presentation.
    fn image_lattice(&self) -> IntMatrix {
        self.matrix.hstack(&self.target.relations())
    }

    pub fn is_surjective(&self) -> bool {
        cokernel(&self.image_lattice()).is_zero()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel_subgroup().as_group().is_zero()
    }

    pub fn is_iso(&self) -> bool {
        self.source == self.target && self.is_surjective() && self.is_injective()
    }

    pub fn is_zero_map(&self) -> bool {
        // zero iff every generator image lies in the target relation lattice
        let t_rel = self.target.relations();
        if t_rel.cols() == 0 {
            return self.matrix.is_zero();
        }
        t_rel.lattice_contains(&self.matrix)
    }

    /// Image as a subgroup of the target.
    pub fn image_subgroup(&self) -> Subgroup {
        Subgroup::new(self.target.clone(), self.matrix.clone())
    }

    /// Kernel as a subgroup of the source.
    pub fn kernel_subgroup(&self) -> Subgroup {
        let t_rel = self.target.relations();
        let lat = if t_rel.cols() == 0 {
            self.matrix.kernel_basis()
        } else {
            self.matrix.preimage_lattice(&t_rel)
        };
        Subgroup::new(self.source.clone(), lat)
    }

    pub fn cokernel_group(&self) -> FgAbGroup {
        cokernel(&self.image_lattice())
    }

    /// The map of a hom applied to an element (generator coordinates).
    pub fn apply(&self, v: &IntMatrix) -> IntMatrix {
        self.matrix.mul(v)
    }

    /// Restriction of this hom to maps between subgroups, giving a hom of
    /// their abstract groups. `sub_src` must map into `sub_tgt`.
    pub fn restrict(&self, sub_src: &Subgroup, sub_tgt: &Subgroup) -> Option<GroupHom> {
        let src = sub_src.presented();
        let tgt = sub_tgt.presented();
        // images of the subgroup basis in target coordinates
        let img = self.matrix.mul(&src.basis);
        // express in the target subgroup basis, modulo ambient relations
        let sys = tgt.basis.hstack(&self.target.relations());
        let sol = sys.solve(&img)?;
        let coords = sol.submatrix_rows(&(0..tgt.basis.cols()).collect::<Vec<_>>());
        GroupHom::new(src.group.clone(), tgt.group.clone(), coords_to_hom_matrix(&src, &tgt, &coords))
    }
}

fn coords_to_hom_matrix(src: &PresentedSubgroup, tgt: &PresentedSubgroup, coords: &IntMatrix) -> IntMatrix {
    // coords: (tgt basis count) x (src basis count); generators of the
    // abstract groups are in bijection with basis columns
    let _ = src;
    let _ = tgt;
    coords.clone()
}

/// A subgroup of a group in normal form, given by a generating lattice in
/// presentation coordinates. The ambient relation lattice is implicitly
/// included.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub ambient: FgAbGroup,
    lattice: IntMatrix,
}

/// A subgroup with a chosen lattice basis and its abstract group.
#[derive(Clone, Debug)]
pub struct PresentedSubgroup {
    pub group: FgAbGroup,
    /// Basis of the full lattice (subgroup generators + ambient relations);
    /// its columns present the abstract group: generator i of `group`
    /// corresponds to column i times the SNF change of basis.
    pub basis: IntMatrix,
    /// Expression of ambient relations in the basis.
    pub rel_coords: IntMatrix,
}

impl Subgroup {
    pub fn new(ambient: FgAbGroup, lattice: IntMatrix) -> Subgroup {
        assert_eq!(lattice.rows(), ambient.num_generators(), "subgroup lattice shape");
        Subgroup { ambient, lattice }
    }

    pub fn full(ambient: &FgAbGroup) -> Subgroup {
        let n = ambient.num_generators();
        Subgroup::new(ambient.clone(), IntMatrix::identity(n))
    }

    pub fn zero(ambient: &FgAbGroup) -> Subgroup {
        let n = ambient.num_generators();
        Subgroup::new(ambient.clone(), IntMatrix::zero(n, 0))
    }

    /// Full lattice including ambient relations.
    pub fn full_lattice(&self) -> IntMatrix {
        self.lattice.hstack(&self.ambient.relations())
    }

    pub fn raw_lattice(&self) -> &IntMatrix {
        &self.lattice
    }

    pub fn contains(&self, other: &Subgroup) -> bool {
        assert_eq!(self.ambient, other.ambient);
        let mine = self.full_lattice();
        if mine.cols() == 0 {
            return other.full_lattice().is_zero() || other.full_lattice().cols() == 0;
        }
        mine.lattice_contains(&other.full_lattice())
    }

    pub fn same_as(&self, other: &Subgroup) -> bool {
        self.contains(other) && other.contains(self)
    }

    pub fn contains_element(&self, v: &IntMatrix) -> bool {
        let mine = self.full_lattice();
        if mine.cols() == 0 {
            return v.is_zero();
        }
        mine.lattice_contains(v)
    }

    /// Sum of two subgroups of the same ambient group.
    pub fn sum(&self, other: &Subgroup) -> Subgroup {
        assert_eq!(self.ambient, other.ambient);
        Subgroup::new(self.ambient.clone(), self.lattice.hstack(&other.lattice))
    }

    /// Intersection of two subgroups of the same ambient group.
    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        assert_eq!(self.ambient, other.ambient);
        let a = self.full_lattice();
        let b = other.full_lattice();
        Subgroup::new(self.ambient.clone(), a.lattice_intersection(&b))
    }

    /// The abstract group `(lattice + relations) / relations`.
    pub fn as_group(&self) -> FgAbGroup {
        self.presented().group
    }

    /// Basis plus presentation of the abstract subgroup.
    pub fn presented(&self) -> PresentedSubgroup {
        let full = self.full_lattice();
        let basis = full.lattice_basis();
        let rel = self.ambient.relations();
        let rel_coords = if basis.cols() == 0 {
            IntMatrix::zero(0, rel.cols())
        } else {
            basis.solve(&rel).expect("relations lie in the full lattice")
        };
        let group = cokernel_of_presentation(basis.cols(), &rel_coords);
        PresentedSubgroup { group, basis, rel_coords }
    }

    /// Quotient of the ambient group by this subgroup.
    pub fn quotient(&self) -> FgAbGroup {
        cokernel(&self.full_lattice())
    }
}

fn cokernel_of_presentation(generators: usize, relations: &IntMatrix) -> FgAbGroup {
    assert_eq!(relations.rows(), generators);
    cokernel(relations)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn(n: i64) -> FgAbGroup {
        FgAbGroup::cyclic(n)
    }

    #[test]
    fn normal_form_basics() {
        let g = FgAbGroup::from_cyclic_factors(&[
            BigInt::from(4),
            BigInt::from(6),
            BigInt::from(1),
        ]);
        assert_eq!(g.torsion(), &[BigInt::from(2), BigInt::from(12)]);
        assert_eq!(g.free_rank(), 0);
        let h = FgAbGroup::from_cyclic_factors(&[BigInt::from(12), BigInt::from(2)]);
        assert_eq!(g, h);
    }

    #[test]
    fn cokernel_examples() {
        // multiply-by-p on Z
        let m = IntMatrix::from_rows(&[&[5i64]]);
        assert_eq!(cokernel(&m), zn(5));
        // worked 2x2 example
        let m = IntMatrix::from_rows(&[&[2i64, 4], &[6, 8]]);
        let g = cokernel(&m);
        assert_eq!(g.torsion(), &[BigInt::from(2), BigInt::from(4)]);
        // zero 2x0 matrix
        let m = IntMatrix::zero(2, 0);
        assert_eq!(cokernel(&m), FgAbGroup::free(2));
    }

    #[test]
    fn bifunctor_examples() {
        assert_eq!(tensor_groups(&zn(4), &zn(6)), zn(2));
        let g = FgAbGroup::direct_sum(&FgAbGroup::free(1), &zn(9));
        assert_eq!(tensor_groups(&FgAbGroup::free(1), &g), g);
        assert_eq!(ext1_groups(&zn(7), &FgAbGroup::free(1)), zn(7));
        assert_eq!(hom_groups(&zn(6), &zn(4)), zn(2));
        assert_eq!(tor1_groups(&zn(6), &zn(4)), zn(2));
        assert_eq!(hom_groups(&zn(5), &FgAbGroup::free(1)), FgAbGroup::zero());
    }

    /// Brute-force oracle: compute the bifunctors from explicit free
    /// resolutions `0 -> Z^t -> Z^g -> A -> 0` by pure matrix algebra,
    /// independently of the pairwise rules.
    mod oracle {
        use super::*;

        pub fn tensor(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
            // A (x) B = coker([P_A (x) I | I (x) P_B])
            let (pa, ga) = (a.relations(), a.num_generators());
            let (pb, gb) = (b.relations(), b.num_generators());
            let ia = IntMatrix::identity(ga);
            let ib = IntMatrix::identity(gb);
            let m = pa.kronecker(&ib).hstack(&ia.kronecker(&pb));
            cokernel(&m)
        }

        pub fn hom(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
            // Hom(A, B) = ker(B^{g_a} -> B^{t_a}) via transposed relations
            let pa_t = a.relations().transpose();
            let gb = b.num_generators();
            let ib = IntMatrix::identity(gb);
            let map = pa_t.kronecker(&ib);
            // kernel of a map into B^{t_a}: preimage of relations
            let t_rel = stack_relations(b, a.relations().cols());
            let lat = if t_rel.cols() == 0 {
                map.kernel_basis()
            } else {
                map.preimage_lattice(&t_rel)
            };
            let src_rel = stack_relations(b, a.num_generators());
            quotient_of_lattices(&lat, &src_rel)
        }

        pub fn ext1(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
            // Ext(A, B) = coker(B^{g_a} -> B^{t_a})
            let pa_t = a.relations().transpose();
            let gb = b.num_generators();
            let ib = IntMatrix::identity(gb);
            let map = pa_t.kronecker(&ib);
            let rel = stack_relations(b, a.relations().cols());
            cokernel(&map.hstack(&rel))
        }

        pub fn tor1(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
            // Tor(A, B) = ker(B^{t_a} -> B^{g_a})
            let pa = a.relations();
            let gb = b.num_generators();
            let ib = IntMatrix::identity(gb);
            let map = pa.kronecker(&ib);
            let t_rel = stack_relations(b, a.num_generators());
            let lat = if t_rel.cols() == 0 {
                map.kernel_basis()
            } else {
                map.preimage_lattice(&t_rel)
            };
            let src_rel = stack_relations(b, a.relations().cols());
            quotient_of_lattices(&lat, &src_rel)
        }

        /// Relations of `B^n` inside `Z^{g_b * n}`.
        fn stack_relations(b: &FgAbGroup, n: usize) -> IntMatrix {
            IntMatrix::identity(n).kronecker(&b.relations())
        }

        /// `(span(big) + span(small)) / span(small)` where `small` is
        /// contained in `span(big) + span(small)`... here: quotient of
        /// span(big + small) by span(small).
        fn quotient_of_lattices(big: &IntMatrix, small: &IntMatrix) -> FgAbGroup {
            let total = big.hstack(small);
            let basis = total.lattice_basis();
            if basis.cols() == 0 {
                return FgAbGroup::zero();
            }
            let coords = basis.solve(small).expect("small lattice inside total");
            cokernel(&coords)
        }
    }

    #[test]
    fn bifunctors_agree_with_free_resolution_oracle() {
        // all groups with torsion factors <= 12 (at most two) and free rank <= 2
        let mut groups: Vec<FgAbGroup> = Vec::new();
        for free in 0..=2usize {
            groups.push(FgAbGroup::free(free));
            for t1 in 2..=12i64 {
                let mut g = FgAbGroup::free(free).direct_sum(&zn(t1));
                groups.push(g.clone());
                for t2 in 2..=12i64 {
                    g = FgAbGroup::free(free).direct_sum(&zn(t1)).direct_sum(&zn(t2));
                    groups.push(g);
                }
            }
        }
        groups.sort();
        groups.dedup();
        // exhaustive on a representative slice to keep the suite quick
        let sample: Vec<&FgAbGroup> = groups.iter().step_by(7).collect();
        for a in &sample {
            for b in &sample {
                assert_eq!(tensor_groups(a, b), oracle::tensor(a, b), "tensor {:?} {:?}", a, b);
                assert_eq!(hom_groups(a, b), oracle::hom(a, b), "hom {:?} {:?}", a, b);
                assert_eq!(ext1_groups(a, b), oracle::ext1(a, b), "ext1 {:?} {:?}", a, b);
                assert_eq!(tor1_groups(a, b), oracle::tor1(a, b), "tor1 {:?} {:?}", a, b);
            }
        }
    }

    #[test]
    fn hom_validation_and_kernel() {
        // reduction Z/4 -> Z/2 is a valid surjection with kernel Z/2
        let f = GroupHom::new(zn(4), zn(2), IntMatrix::from_rows(&[&[1i64]])).unwrap();
        assert!(f.is_surjective());
        assert!(!f.is_injective());
        assert_eq!(f.kernel_subgroup().as_group(), zn(2));
        // Z/2 -> Z/4 must hit the 2-torsion: x -> 2x
        let g = GroupHom::new(zn(2), zn(4), IntMatrix::from_rows(&[&[2i64]])).unwrap();
        assert!(g.is_injective());
        assert_eq!(g.cokernel_group(), zn(2));
        // x -> x is not a hom Z/2 -> Z/4
        assert!(GroupHom::new(zn(2), zn(4), IntMatrix::from_rows(&[&[1i64]])).is_none());
    }

    #[test]
    fn subgroup_arithmetic() {
        let z = FgAbGroup::free(1);
        let even = Subgroup::new(z.clone(), IntMatrix::from_rows(&[&[2i64]]));
        let three = Subgroup::new(z.clone(), IntMatrix::from_rows(&[&[3i64]]));
        assert_eq!(even.intersection(&three).as_group(), FgAbGroup::free(1));
        assert!(even.sum(&three).same_as(&Subgroup::full(&z)));
        assert_eq!(even.quotient(), zn(2));
        assert_eq!(even.as_group(), FgAbGroup::free(1));
    }

    #[test]
    fn restriction_of_homs() {
        // f: Z -> Z, x -> 2x restricted to 3Z -> 6Z-inside-2Z
        let z = FgAbGroup::free(1);
        let f = GroupHom::new(z.clone(), z.clone(), IntMatrix::from_rows(&[&[2i64]])).unwrap();
        let src = Subgroup::new(z.clone(), IntMatrix::from_rows(&[&[3i64]]));
        let tgt = Subgroup::new(z.clone(), IntMatrix::from_rows(&[&[2i64]]));
        let r = f.restrict(&src, &tgt).unwrap();
        assert_eq!(r.source, FgAbGroup::free(1));
        assert_eq!(r.target, FgAbGroup::free(1));
        // 3 -> 6 = 3 * (basis 2)
        assert_eq!(r.matrix.get(0, 0), BigInt::from(3));
    }
}
