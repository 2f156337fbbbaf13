//! GL2(F3), PGL2(F3) and the isomorphism S4 -> PGL2(F3) given on the
//! transpositions (1 2), (2 3), (3 4).

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};

/// A 2x2 matrix over F3, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2F3(pub [u8; 4]);

impl Mat2F3 {
    pub const I: Mat2F3 = Mat2F3([1, 0, 0, 1]);
    pub const MINUS_I: Mat2F3 = Mat2F3([2, 0, 0, 2]);

    pub fn new(a: u8, b: u8, c: u8, d: u8) -> Self {
        Mat2F3([a % 3, b % 3, c % 3, d % 3])
    }

    pub fn mul(&self, o: &Mat2F3) -> Mat2F3 {
        let [a, b, c, d] = self.0;
        let [e, f, g, h] = o.0;
        Mat2F3::new(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
    }

    pub fn det(&self) -> u8 {
        let [a, b, c, d] = self.0;
        (a * d + 2 * (b * c % 3)) % 3
    }

    pub fn neg(&self) -> Mat2F3 {
        let [a, b, c, d] = self.0;
        Mat2F3::new(2 * a, 2 * b, 2 * c, 2 * d)
    }

    /// All 48 invertible matrices.
    pub fn all() -> Vec<Mat2F3> {
        let mut v = Vec::with_capacity(48);
        for k in 0..81u8 {
            let m = Mat2F3::new(k % 3, k / 3 % 3, k / 9 % 3, k / 27);
            if m.det() != 0 {
                v.push(m);
            }
        }
        v
    }
}

impl fmt::Display for Mat2F3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

impl Serialize for Mat2F3 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let [a, b, c, d] = self.0;
        [[a, b], [c, d]].serialize(s)
    }
}

/// The class {M, -M}, stored through the representative whose first
/// nonzero entry is 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PGLElem(Mat2F3);

impl PGLElem {
    pub fn of(m: Mat2F3) -> Self {
        let first = m.0.iter().copied().find(|&e| e != 0).expect("invertible");
        PGLElem(if first == 1 { m } else { m.neg() })
    }

    pub fn rep(&self) -> Mat2F3 {
        self.0
    }

    pub fn lifts(&self) -> [Mat2F3; 2] {
        [self.0, self.0.neg()]
    }

    pub fn mul(&self, o: &PGLElem) -> PGLElem {
        PGLElem::of(self.0.mul(&o.0))
    }
}

impl fmt::Display for PGLElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "±{}", self.0)
    }
}

/// The projection GL2(F3) -> PGL2(F3).
pub fn pi(m: &Mat2F3) -> PGLElem {
    PGLElem::of(*m)
}

/// A permutation of {1,2,3,4}, stored as images of 0..4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub [u8; 4]);

impl Perm {
    pub const ID: Perm = Perm([0, 1, 2, 3]);

    /// Product of cycles written with points 1..=4, applied right to left.
    pub fn from_cycles(cycles: &[&[u8]]) -> Perm {
        let mut p = Perm::ID;
        for cyc in cycles.iter().rev() {
            let mut c = Perm::ID;
            for (i, &a) in cyc.iter().enumerate() {
                let b = cyc[(i + 1) % cyc.len()];
                c.0[(a - 1) as usize] = b - 1;
            }
            p = c.compose(&p);
        }
        p
    }

    /// (self o other)(i) = self(other(i)).
    pub fn compose(&self, other: &Perm) -> Perm {
        let mut r = [0u8; 4];
        for i in 0..4 {
            r[i] = self.0[other.0[i] as usize];
        }
        Perm(r)
    }

    pub fn all() -> Vec<Perm> {
        words().keys().copied().collect::<BTreeSet<_>>().into_iter().collect()
    }
}

/// Transpositions (1 2), (2 3), (3 4).
fn generator_perm(i: usize) -> Perm {
    let mut p = Perm::ID;
    p.0.swap(i, i + 1);
    p
}

pub fn generator_matrix(i: usize) -> Mat2F3 {
    match i {
        0 => Mat2F3::new(0, 1, 1, 0),
        1 => Mat2F3::new(2, 1, 0, 1),
        2 => Mat2F3::new(2, 0, 0, 1),
        _ => panic!("generator index out of range"),
    }
}

/// Shortest words in the generating transpositions, by breadth-first search.
fn words() -> &'static HashMap<Perm, Vec<usize>> {
    static W: OnceLock<HashMap<Perm, Vec<usize>>> = OnceLock::new();
    W.get_or_init(|| {
        let mut w = HashMap::new();
        w.insert(Perm::ID, vec![]);
        let mut queue = VecDeque::from([Perm::ID]);
        while let Some(p) = queue.pop_front() {
            for g in 0..3 {
                let q = generator_perm(g).compose(&p);
                if !w.contains_key(&q) {
                    let mut word = vec![g];
                    word.extend(&w[&p]);
                    w.insert(q, word);
                    queue.push_back(q);
                }
            }
        }
        w
    })
}

/// A word in the generating transpositions (indices 0, 1, 2) for `p`.
pub fn transposition_word(p: &Perm) -> Vec<usize> {
    words()[p].clone()
}

/// The matrix product of generator matrices along a word.
pub fn phi_word(word: &[usize]) -> Mat2F3 {
    word.iter().fold(Mat2F3::I, |m, &g| m.mul(&generator_matrix(g)))
}

/// A lift of phi(p) to GL2(F3).
pub fn phi_lift(p: &Perm) -> Mat2F3 {
    phi_word(&transposition_word(p))
}

pub fn phi(p: &Perm) -> PGLElem {
    pi(&phi_lift(p))
}

/// Group operations needed by the generic closure and recognizer.
pub trait GroupElem: Copy + Eq + Ord + std::hash::Hash + fmt::Debug {
    fn identity() -> Self;
    fn op(&self, o: &Self) -> Self;
}

impl GroupElem for Mat2F3 {
    fn identity() -> Self {
        Mat2F3::I
    }
    fn op(&self, o: &Self) -> Self {
        self.mul(o)
    }
}

impl GroupElem for PGLElem {
    fn identity() -> Self {
        PGLElem::of(Mat2F3::I)
    }
    fn op(&self, o: &Self) -> Self {
        self.mul(o)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SubgroupRecord<T: GroupElem> {
    #[serde(skip)]
    pub elements: Vec<T>,
    pub order: usize,
    pub iso_label: String,
    pub generators: Vec<T>,
}

impl<T: GroupElem> SubgroupRecord<T> {
    pub fn contains(&self, x: &T) -> bool {
        self.elements.binary_search(x).is_ok()
    }
}

fn closure<T: GroupElem>(gens: &[T]) -> Vec<T> {
    let mut set: BTreeSet<T> = BTreeSet::from([T::identity()]);
    let mut frontier = vec![T::identity()];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.op(g);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set.into_iter().collect()
}

/// The subgroup generated by `gens` (finite, so products suffice).
pub fn subgroup<T: GroupElem>(gens: &[T]) -> Result<SubgroupRecord<T>> {
    let elements = closure(gens);
    let label = iso_type(&elements)?;
    Ok(SubgroupRecord { order: elements.len(), elements, iso_label: label, generators: gens.to_vec() })
}

/// pi^-1(G).
pub fn preimage(g: &SubgroupRecord<PGLElem>) -> Result<SubgroupRecord<Mat2F3>> {
    let mut gens: Vec<Mat2F3> = g.generators.iter().map(|x| x.rep()).collect();
    gens.push(Mat2F3::MINUS_I);
    subgroup(&gens)
}

fn elem_order<T: GroupElem>(x: &T) -> usize {
    let mut y = *x;
    let mut k = 1;
    while y != T::identity() {
        y = y.op(x);
        k += 1;
    }
    k
}

fn power<T: GroupElem>(x: &T, k: usize) -> T {
    (0..k).fold(T::identity(), |acc, _| acc.op(x))
}

/// Isomorphism type by order, commutativity and element orders, with an
/// explicit relation check to separate the groups of order 16.
pub fn iso_type<T: GroupElem>(h: &[T]) -> Result<String> {
    let n = h.len();
    let abelian = h.iter().all(|x| h.iter().all(|y| x.op(y) == y.op(x)));
    let orders: Vec<usize> = h.iter().map(elem_order).collect();
    let count = |k: usize| orders.iter().filter(|&&o| o == k).count();
    let max = orders.iter().copied().max().unwrap_or(1);
    let label = match (n, abelian) {
        (1, _) => "C1",
        (2, _) => "C2",
        (3, _) => "C3",
        (4, _) => if max == 4 { "C4" } else { "C2xC2" },
        (6, true) => "C6",
        (6, false) => "S3",
        (8, true) => match max {
            8 => "C8",
            4 => "C4xC2",
            _ => "C2^3",
        },
        (8, false) => if count(4) == 2 { "D4" } else { "Q8" },
        (12, true) => if max == 12 { "C12" } else { "C6xC2" },
        (12, false) => match (count(2), count(6)) {
            (3, 0) => "A4",
            (7, _) => "D6",
            (1, _) => "Dic3",
            _ => return Err(Error::UnrecognizedGroup(n)),
        },
        (16, false) if max == 8 => order16(h, &orders)?,
        (24, false) => match count(2) {
            9 if count(6) == 0 && count(4) == 6 => "S4",
            1 if count(4) == 6 => "SL2F3",
            _ => return Err(Error::UnrecognizedGroup(n)),
        },
        (48, false) if count(8) == 12 && count(2) == 13 && count(6) == 8 => "GL2F3",
        _ => return Err(Error::UnrecognizedGroup(n)),
    };
    Ok(label.to_string())
}

fn order16<T: GroupElem>(h: &[T], orders: &[usize]) -> Result<&'static str> {
    let s = h[orders.iter().position(|&o| o == 8).unwrap()];
    let cyc: BTreeSet<T> = (0..8).map(|k| power(&s, k)).collect();
    let s3 = power(&s, 3);
    let s7 = power(&s, 7);
    for (r, &o) in h.iter().zip(orders) {
        if o != 2 || cyc.contains(r) {
            continue;
        }
        let conj = r.op(&s).op(r);
        if conj == s3 {
            return Ok("SD16");
        }
        if conj == s7 {
            return Ok("D8");
        }
    }
    if orders.iter().filter(|&&o| o == 2).count() == 1 {
        return Ok("Q16");
    }
    Err(Error::UnrecognizedGroup(h.len()))
}

/// Whether 1 -> {±I} -> Gtilde -> G -> 1 splits: some choice of lifts of
/// the generators of G generates a subgroup mapping isomorphically onto G.
pub fn is_split(gtilde: &SubgroupRecord<Mat2F3>, g: &SubgroupRecord<PGLElem>) -> bool {
    let k = g.generators.len();
    (0..1u32 << k).any(|mask| {
        let lifts: Vec<Mat2F3> = g
            .generators
            .iter()
            .enumerate()
            .map(|(i, x)| x.lifts()[((mask >> i) & 1) as usize])
            .collect();
        debug_assert!(lifts.iter().all(|m| gtilde.contains(m)));
        let h = closure(&lifts);
        h.len() == g.order && !h.contains(&Mat2F3::MINUS_I)
    })
}

/// One row of the subgroup table: G_i, its preimage, and the split flag.
#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub index: usize,
    pub generators: Vec<String>,
    pub g: SubgroupRecord<PGLElem>,
    pub gtilde: SubgroupRecord<Mat2F3>,
    pub split: bool,
}

/// The permutation generators of G_0, ..., G_4.
pub fn g_generators(i: usize) -> Vec<Vec<Vec<u8>>> {
    let v: &[&[u8]] = match i {
        0 => &[&[1, 2]],
        1 => &[&[1, 2], &[3, 4]],
        2 => &[&[1, 2, 3], &[1, 2]],
        3 => &[&[1, 2, 3, 4], &[2, 4]],
        4 => &[&[1, 2], &[2, 3], &[3, 4]],
        _ => panic!("index out of range"),
    };
    v.iter().map(|c| vec![c.to_vec()]).collect()
}

pub fn g_subgroup(i: usize) -> Result<SubgroupRecord<PGLElem>> {
    let gens: Vec<PGLElem> = g_generators(i)
        .iter()
        .map(|cycles| {
            let cs: Vec<&[u8]> = cycles.iter().map(|c| c.as_slice()).collect();
            phi(&Perm::from_cycles(&cs))
        })
        .collect();
    subgroup(&gens)
}

pub fn table() -> Result<Vec<TableRow>> {
    (0..5)
        .map(|i| {
            let g = g_subgroup(i)?;
            let gtilde = preimage(&g)?;
            let split = is_split(&gtilde, &g);
            let generators = g_generators(i)
                .iter()
                .map(|cycles| {
                    cycles
                        .iter()
                        .map(|c| {
                            let s: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                            format!("({})", s.join(" "))
                        })
                        .collect::<String>()
                })
                .collect();
            Ok(TableRow { index: i, generators, g, gtilde, split })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_examples() {
        let t12 = Perm::from_cycles(&[&[1, 2]]);
        assert_eq!(phi(&t12), PGLElem::of(Mat2F3::new(0, 1, 1, 0)));
        assert_eq!(phi(&Perm::ID), PGLElem::of(Mat2F3::I));
        let p = Perm::from_cycles(&[&[1, 2], &[3, 4]]);
        assert_eq!(phi(&p), PGLElem::of(Mat2F3::new(0, 1, 2, 0)));
        assert_eq!(phi(&p), PGLElem::of(Mat2F3::new(0, 2, 1, 0)));
    }

    #[test]
    fn phi_is_bijective_homomorphism() {
        let perms = Perm::all();
        assert_eq!(perms.len(), 24);
        for s in &perms {
            for t in &perms {
                assert_eq!(phi(&s.compose(t)), phi(s).mul(&phi(t)));
            }
        }
        let images: BTreeSet<PGLElem> = perms.iter().map(phi).collect();
        assert_eq!(images.len(), 24);
        for s in &perms {
            assert_eq!(pi(&phi_lift(s)), phi(s));
        }
    }

    #[test]
    fn cycles() {
        let c = Perm::from_cycles(&[&[1, 2, 3]]);
        assert_eq!(c.0, [1, 2, 0, 3]);
    }

    #[test]
    fn whole_group() {
        let all = subgroup(&[generator_matrix(0), generator_matrix(1), generator_matrix(2)]).unwrap();
        assert_eq!(all.order, 48);
        assert_eq!(all.iso_label, "GL2F3");
        assert_eq!(Mat2F3::all().len(), 48);
        let minus = subgroup(&[Mat2F3::MINUS_I]).unwrap();
        assert_eq!((minus.order, minus.iso_label.as_str()), (2, "C2"));
        let trivial = subgroup::<PGLElem>(&[]).unwrap();
        assert_eq!(preimage(&trivial).unwrap().iso_label, "C2");
    }

    #[test]
    fn tables() {
        let rows = table().unwrap();
        let got: Vec<(usize, &str, usize, &str, bool)> = rows
            .iter()
            .map(|r| (r.g.order, r.g.iso_label.as_str(), r.gtilde.order, r.gtilde.iso_label.as_str(), r.split))
            .collect();
        assert_eq!(
            got,
            vec![
                (2, "C2", 4, "C2xC2", true),
                (4, "C2xC2", 8, "D4", false),
                (6, "S3", 12, "D6", true),
                (8, "D4", 16, "SD16", false),
                (24, "S4", 48, "GL2F3", false),
            ]
        );
    }

    #[test]
    fn split_is_conjugation_invariant() {
        let all = Mat2F3::all();
        for i in 0..5 {
            let g = g_subgroup(i).unwrap();
            let gt = preimage(&g).unwrap();
            let base = is_split(&gt, &g);
            for c in all.iter().step_by(7) {
                let inv = all.iter().find(|x| x.mul(c) == Mat2F3::I).unwrap();
                let gens: Vec<PGLElem> =
                    g.generators.iter().map(|x| pi(&c.mul(&x.rep()).mul(inv))).collect();
                let g2 = subgroup(&gens).unwrap();
                assert_eq!(is_split(&preimage(&g2).unwrap(), &g2), base);
            }
        }
    }
}
