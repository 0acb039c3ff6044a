//! Finite groups of automorphisms of curve products and their action on the
//! monomial basis.
//!
//! An element `e` acts on `C_{g_1} × … × C_{g_k}` by
//! `e(x)_i = τ_i(x_{σ(i)})`, where `σ` is a permutation of the factors and
//! `τ_i = (-1)^{s_i} ψ^{j_i}` is a twist of the `i`-th curve. Cohomology is
//! acted on by pullback, so `(a ∘ b)^* = b^* ∘ a^*`.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::cohomology::{Letter, Monomial, ProductSpace, Scalar};
use crate::error::{Error, Result};

/// Default cap on the number of elements a closure may produce.
pub const DEFAULT_CLOSURE_CAP: u64 = 10_000_000;

/// `(-1)^inv ∘ ψ^psi` on one curve. `ψ` and the involution commute.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Twist {
    pub psi: u32,
    pub inv: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GroupElement {
    perm: Vec<usize>,
    twist: Vec<Twist>,
}

impl GroupElement {
    pub fn identity(k: usize) -> Self {
        Self { perm: (0..k).collect(), twist: vec![Twist::default(); k] }
    }

    pub fn new(perm: Vec<usize>, twist: Vec<Twist>) -> Result<Self> {
        let k = perm.len();
        if twist.len() != k {
            return Err(Error::Malformed(format!("{} twists for {k} factors", twist.len())));
        }
        let mut seen = vec![false; k];
        for &i in &perm {
            if i >= k || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Malformed(format!("{perm:?} is not a permutation")));
            }
        }
        Ok(Self { perm, twist })
    }

    /// A pure twist `ψ^{j_1} × … × ψ^{j_k}`.
    pub fn psi_twist(space: &ProductSpace, exps: &[i64]) -> Self {
        let twist = exps
            .iter()
            .zip(space.factors())
            .map(|(&j, c)| Twist { psi: j.rem_euclid(c.psi_order() as i64) as u32, inv: false })
            .collect();
        Self { perm: (0..exps.len()).collect(), twist }
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn twist(&self) -> &[Twist] {
        &self.twist
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.twist.iter().all(|t| *t == Twist::default())
    }

    pub fn is_pure_twist(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.twist.iter().all(|t| !t.inv)
    }

    /// Checks that the element is an automorphism of `space`.
    pub fn check_on(&self, space: &ProductSpace) -> Result<()> {
        let f = space.factors();
        if self.dim() != f.len() {
            return Err(Error::Contract(format!(
                "element acts on {} factors, space has {}",
                self.dim(),
                f.len()
            )));
        }
        for (i, (&p, t)) in self.perm.iter().zip(&self.twist).enumerate() {
            if f[i].genus != f[p].genus {
                return Err(Error::Contract(format!(
                    "factor {p} (genus {}) cannot be moved onto factor {i} (genus {})",
                    f[p].genus, f[i].genus
                )));
            }
            if u64::from(t.psi) >= f[i].psi_order() {
                return Err(Error::Contract(format!("twist exponent {} not reduced on factor {i}", t.psi)));
            }
        }
        Ok(())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self, space: &ProductSpace) -> Self {
        let f = space.factors();
        let perm = self.perm.iter().map(|&p| other.perm[p]).collect();
        let twist = (0..self.dim())
            .map(|i| {
                let a = self.twist[i];
                let b = other.twist[self.perm[i]];
                let order = f[i].psi_order();
                Twist {
                    psi: ((u64::from(a.psi) + u64::from(b.psi)) % order) as u32,
                    inv: a.inv ^ b.inv,
                }
            })
            .collect();
        Self { perm, twist }
    }

    pub fn inverse(&self, space: &ProductSpace) -> Self {
        let f = space.factors();
        let k = self.dim();
        let mut perm = vec![0; k];
        let mut twist = vec![Twist::default(); k];
        for i in 0..k {
            let p = self.perm[i];
            perm[p] = i;
            let order = f[p].psi_order() as u32;
            let t = self.twist[i];
            twist[p] = Twist { psi: (order - t.psi) % order, inv: t.inv };
        }
        Self { perm, twist }
    }

    /// Cycles of the factor permutation, each starting at its smallest index.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let k = self.dim();
        let mut seen = vec![false; k];
        let mut out = Vec::new();
        for start in 0..k {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.perm[i];
            }
            out.push(cycle);
        }
        out
    }

    /// Pullback `e^* m = s · m'`.
    ///
    /// The letter on factor `i` moves to factor `σ(i)` and picks up the
    /// eigenvalue of `τ_i`; reordering the odd letters into factor order adds
    /// the Koszul sign.
    pub fn act(&self, space: &ProductSpace, m: &Monomial) -> (Scalar, Monomial) {
        let modulus = space.modulus();
        let f = space.factors();
        let mut out = vec![Letter::One; self.dim()];
        let mut exp = 0u64;
        for (i, &letter) in m.letters().iter().enumerate() {
            out[self.perm[i]] = letter;
            exp += letter_exp(modulus, f[i].psi_order(), self.twist[i], letter);
        }
        let odd: Vec<usize> = m
            .letters()
            .iter()
            .enumerate()
            .filter(|(_, l)| l.is_odd())
            .map(|(i, _)| self.perm[i])
            .collect();
        let mut inversions = 0usize;
        for x in 0..odd.len() {
            for y in x + 1..odd.len() {
                if odd[x] > odd[y] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 1 {
            exp += modulus / 2;
        }
        (Scalar::from_exp(exp, modulus), Monomial(out))
    }
}

/// Exponent of `ζ_modulus` by which `τ^*` scales `letter` on a curve whose
/// `ψ` has order `order`.
pub(crate) fn letter_exp(modulus: u64, order: u64, t: Twist, letter: Letter) -> u64 {
    let sign = if t.inv { modulus / 2 } else { 0 };
    let unit = modulus / order;
    match letter {
        Letter::One | Letter::Top => 0,
        Letter::Hol(l) => (sign + (u64::from(t.psi) * u64::from(l) % order) * unit) % modulus,
        Letter::AntiHol(l) => {
            let e = (order - u64::from(t.psi) * u64::from(l) % order) % order;
            (sign + e * unit) % modulus
        }
    }
}

/// A group together with the space it acts on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupSpec {
    /// The group `G(a, b, g)` acting on `C_g^{a+b}`.
    Gabg { a: usize, b: usize, g: u32 },
    /// The weight-two construction on `(C_g^2)^{n1·n2}`.
    Weight2 { n1: usize, n2: usize, g: u32 },
    /// Any generating set on an explicit product.
    Explicit { genera: Vec<u32>, gens: Vec<GroupElement> },
    /// The trivial group.
    Trivial { genera: Vec<u32> },
    /// Direct product of groups acting on the product of their spaces.
    Product { parts: Vec<GroupSpec> },
}

/// A group `G = K ⋊ H` where `K` consists of pure `ψ`-twists and is given by
/// generators, and `H` contains no `ψ`-twists and is fully enumerated.
#[derive(Debug, Clone)]
pub struct FactoredGroup {
    pub twist_gens: Vec<GroupElement>,
    pub complement: GeneratedGroup,
}

impl FactoredGroup {
    /// `|K|`, by enumerating the abelian twist subgroup.
    pub fn kernel_order(&self, cap: u64) -> Result<u64> {
        let space = &self.complement.space;
        Ok(close(&self.twist_gens, space, cap)?.order())
    }
}

/// A group as the sorted list of its elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedGroup {
    space: ProductSpace,
    elements: Vec<GroupElement>,
}

impl GeneratedGroup {
    pub fn space(&self) -> &ProductSpace {
        &self.space
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn contains(&self, e: &GroupElement) -> bool {
        self.elements.binary_search(e).is_ok()
    }
}

/// Closure of `gens` under composition.
pub fn close(gens: &[GroupElement], space: &ProductSpace, cap: u64) -> Result<GeneratedGroup> {
    for g in gens {
        g.check_on(space)?;
    }
    let id = GroupElement::identity(space.dim());
    let gens: Vec<&GroupElement> = gens.iter().filter(|g| !g.is_identity()).collect();
    let mut seen: HashSet<GroupElement> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y = x.compose(g, space);
            if !seen.contains(&y) {
                if seen.len() as u64 >= cap {
                    return Err(Error::ResourceCap {
                        what: "group closure",
                        needed: seen.len() as u128 + 1,
                        cap: u128::from(cap),
                    });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut elements: Vec<GroupElement> = seen.into_iter().collect();
    elements.sort();
    Ok(GeneratedGroup { space: space.clone(), elements })
}

fn block_permutations(k: usize, offset: usize, len: usize, signed: bool) -> Vec<GroupElement> {
    // A transposition and a full cycle generate Sym(len). With `signed`, the
    // first coordinate of the block picks up the involution when the
    // permutation is odd.
    let mut out = Vec::new();
    if len < 2 {
        return out;
    }
    let mut swap = GroupElement::identity(k);
    swap.perm.swap(offset, offset + 1);
    if signed {
        swap.twist[offset].inv = true;
    }
    out.push(swap);
    if len > 2 {
        let mut cycle = GroupElement::identity(k);
        for i in 0..len {
            cycle.perm[offset + i] = offset + (i + 1) % len;
        }
        if signed && len % 2 == 0 {
            cycle.twist[offset].inv = true;
        }
        out.push(cycle);
    }
    out
}

impl GroupSpec {
    pub fn gabg(a: usize, b: usize, g: u32) -> Self {
        GroupSpec::Gabg { a, b, g }
    }

    pub fn trivial(genera: &[u32]) -> Self {
        GroupSpec::Trivial { genera: genera.to_vec() }
    }

    pub fn point() -> Self {
        GroupSpec::Trivial { genera: Vec::new() }
    }

    pub fn check(&self) -> Result<()> {
        match self {
            GroupSpec::Gabg { a, b, .. } => {
                if a < b || a + b == 0 {
                    return Err(Error::Contract(format!("G(a,b,g) needs a >= b >= 0 and a + b >= 1, got ({a},{b})")));
                }
            }
            GroupSpec::Weight2 { n1, n2, .. } => {
                if *n1 == 0 || *n2 == 0 {
                    return Err(Error::Contract("weight-two construction needs N1, N2 >= 1".into()));
                }
            }
            GroupSpec::Explicit { genera, gens } => {
                let space = ProductSpace::new(genera);
                for g in gens {
                    g.check_on(&space)?;
                }
            }
            GroupSpec::Trivial { .. } => {}
            GroupSpec::Product { parts } => {
                for p in parts {
                    p.check()?;
                }
            }
        }
        Ok(())
    }

    pub fn space(&self) -> ProductSpace {
        match self {
            GroupSpec::Gabg { a, b, g } => ProductSpace::power(*g, a + b),
            GroupSpec::Weight2 { n1, n2, g } => ProductSpace::power(*g, 2 * n1 * n2),
            GroupSpec::Explicit { genera, .. } | GroupSpec::Trivial { genera } => ProductSpace::new(genera),
            GroupSpec::Product { parts } => parts
                .iter()
                .fold(ProductSpace::point(), |acc, p| acc.product(&p.space())),
        }
    }

    /// Generators whose closure is the group. `ψ`-twist subgroups appear
    /// through generating sets only.
    pub fn generators(&self) -> Result<Vec<GroupElement>> {
        self.check()?;
        Ok(match self.factored_generators() {
            Some((mut twist, complement)) => {
                twist.extend(complement);
                twist
            }
            None => match self {
                GroupSpec::Explicit { gens, .. } => gens.clone(),
                _ => unreachable!("every other kind has a factored form"),
            },
        })
    }

    /// `(twist generators, complement generators)` when the group splits as
    /// `K ⋊ H` with `K` made of pure `ψ`-twists.
    pub fn factored_generators(&self) -> Option<(Vec<GroupElement>, Vec<GroupElement>)> {
        let space = self.space();
        let k = space.dim();
        match self {
            GroupSpec::Gabg { a, b, g } => {
                let (a, b) = (*a, *b);
                let order = 2 * i64::from(*g) + 1;
                let mut twist = Vec::new();
                if order > 1 {
                    // e_i - c_i e_1 with c = (1,…,1,-1,…,-1) generate {j : c·j ≡ 0}.
                    for i in 1..k {
                        let mut exps = vec![0i64; k];
                        exps[i] = 1;
                        exps[0] = if i < a { -1 } else { 1 };
                        twist.push(GroupElement::psi_twist(&space, &exps));
                    }
                }
                let mut complement = block_permutations(k, 0, a, true);
                complement.extend(block_permutations(k, a, b, true));
                if a == b {
                    let mut swap = GroupElement::identity(k);
                    for i in 0..k {
                        swap.perm[i] = (i + a) % k;
                    }
                    complement.push(swap);
                }
                Some((twist, complement))
            }
            GroupSpec::Weight2 { n1, n2, g } => {
                let (n1, n2) = (*n1, *n2);
                let idx = |j: usize, i: usize, c: usize| j * 2 * n2 + 2 * i + c;
                let mut twist = Vec::new();
                if *g > 0 {
                    for j in 0..n1 {
                        let mut exps = vec![0i64; k];
                        for i in 0..n2 {
                            exps[idx(j, i, 0)] = 1;
                            exps[idx(j, i, 1)] = -1;
                        }
                        twist.push(GroupElement::psi_twist(&space, &exps));
                    }
                    for i in 0..n2 {
                        let mut exps = vec![0i64; k];
                        for j in 0..n1 {
                            exps[idx(j, i, 0)] = 1;
                            exps[idx(j, i, 1)] = -1;
                        }
                        twist.push(GroupElement::psi_twist(&space, &exps));
                    }
                }
                let mut complement = Vec::new();
                let mut swap = GroupElement::identity(k);
                for j in 0..n1 {
                    for i in 0..n2 {
                        swap.perm[idx(j, i, 0)] = idx(j, i, 1);
                        swap.perm[idx(j, i, 1)] = idx(j, i, 0);
                        swap.twist[idx(j, i, 0)].inv = true;
                    }
                }
                complement.push(swap);
                let relabel = |f: &dyn Fn(usize, usize) -> (usize, usize)| {
                    let mut e = GroupElement::identity(k);
                    for j in 0..n1 {
                        for i in 0..n2 {
                            let (jj, ii) = f(j, i);
                            for c in 0..2 {
                                e.perm[idx(j, i, c)] = idx(jj, ii, c);
                            }
                        }
                    }
                    e
                };
                if n1 >= 2 {
                    complement.push(relabel(&|j, i| (if j < 2 { 1 - j } else { j }, i)));
                }
                if n1 > 2 {
                    complement.push(relabel(&|j, i| ((j + 1) % n1, i)));
                }
                if n2 >= 2 {
                    complement.push(relabel(&|j, i| (j, if i < 2 { 1 - i } else { i })));
                }
                if n2 > 2 {
                    complement.push(relabel(&|j, i| (j, (i + 1) % n2)));
                }
                Some((twist, complement))
            }
            GroupSpec::Explicit { .. } => None,
            GroupSpec::Trivial { .. } => Some((Vec::new(), Vec::new())),
            GroupSpec::Product { parts } => {
                let mut twist = Vec::new();
                let mut complement = Vec::new();
                let mut offset = 0;
                for part in parts {
                    let kp = part.space().dim();
                    let (t, c) = part.factored_generators()?;
                    twist.extend(t.iter().map(|e| embed(e, offset, k)));
                    complement.extend(c.iter().map(|e| embed(e, offset, k)));
                    offset += kp;
                }
                Some((twist, complement))
            }
        }
    }

    pub fn close(&self, cap: u64) -> Result<GeneratedGroup> {
        close(&self.generators()?, &self.space(), cap)
    }

    /// The split form, with the complement enumerated.
    pub fn factored(&self, cap: u64) -> Option<Result<FactoredGroup>> {
        self.check().err().map(Err).or_else(|| {
            let (twist_gens, complement) = self.factored_generators()?;
            let space = self.space();
            Some(close(&complement, &space, cap).map(|complement| FactoredGroup { twist_gens, complement }))
        })
    }
}

fn embed(e: &GroupElement, offset: usize, k: usize) -> GroupElement {
    let mut out = GroupElement::identity(k);
    for (i, (&p, &t)) in e.perm.iter().zip(&e.twist).enumerate() {
        out.perm[offset + i] = offset + p;
        out.twist[offset + i] = t;
    }
    out
}
