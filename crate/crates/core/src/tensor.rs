//! Coproducts of algebras over a shared base, built as quotients of
//! bounded formal sums of pure tensors.
//!
//! An element is a multiset of generator pairs. The congruence is seeded
//! with the bilinearity merges (and, over a finite base, with moving a
//! scalar across a pair) and then closed under addition and multiplication
//! by every element. The multiset size bound escalates until two
//! consecutive bounds yield the same quotient, verified by an actual
//! isomorphism between them.

use std::collections::{BTreeMap, VecDeque};

use crate::congruence::UnionFind;
use crate::hom::{Homomorphism, NotAHomomorphism};
use crate::salgebra::{BaseSemiring, SAlgebra};
use crate::semiring::FiniteSemiring;

/// A pure tensor `a (x) b`, by carrier indices.
pub type TensorGenerator = (usize, usize);

/// A formal sum of pure tensors, kept as a sorted multiset.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TensorElement(Vec<TensorGenerator>);

impl TensorElement {
    pub fn zero() -> TensorElement {
        TensorElement(Vec::new())
    }

    pub fn pairs(&self) -> &[TensorGenerator] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }
}

/// Reduces a formal sum: drop pairs with a zero coordinate, then greedily
/// merge the first two pairs sharing a coordinate, until no rule applies.
///
/// The result has pairwise distinct coordinates on both sides, so its size
/// is below `min(|A|, |B|)`.
pub fn tensor_normalize(
    a: &FiniteSemiring,
    b: &FiniteSemiring,
    pairs: Vec<TensorGenerator>,
) -> TensorElement {
    let mut pairs = pairs;
    loop {
        pairs.retain(|&(x, y)| x != 0 && y != 0);
        pairs.sort_unstable();
        let mut found = None;
        'scan: for i in 0..pairs.len() {
            for j in i + 1..pairs.len() {
                if pairs[i].0 == pairs[j].0 {
                    found = Some((i, j, (pairs[i].0, b.add(pairs[i].1, pairs[j].1))));
                    break 'scan;
                }
                if pairs[i].1 == pairs[j].1 {
                    found = Some((i, j, (a.add(pairs[i].0, pairs[j].0), pairs[i].1)));
                    break 'scan;
                }
            }
        }
        match found {
            Some((i, j, merged)) => {
                pairs.swap_remove(j);
                pairs.swap_remove(i);
                pairs.push(merged);
            }
            None => return TensorElement(pairs),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TensorError {
    #[error("the two algebras live over different bases")]
    BaseMismatch,
    #[error(
        "no stable quotient up to multiset size {max_bound}; \
         the coproduct is not known at this bound"
    )]
    BoundUnstable { max_bound: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CopairError {
    #[error("the maps do not share endpoints with the coproduct")]
    EndpointMismatch,
    #[error("the induced map is not well defined: one element takes values {lhs} and {rhs}")]
    IllDefined { lhs: usize, rhs: usize },
    #[error(transparent)]
    NotAHomomorphism(#[from] NotAHomomorphism),
}

/// Controls the bound-escalation loop.
#[derive(Clone, Debug)]
pub struct TensorOptions {
    /// Starting multiset size bound; defaults to `min(|A|, |B|) + 1`.
    pub initial_bound: Option<usize>,
    /// How many further bounds to try beyond the first.
    pub extra_bounds: usize,
}

impl Default for TensorOptions {
    fn default() -> TensorOptions {
        TensorOptions {
            initial_bound: None,
            extra_bounds: 3,
        }
    }
}

/// The coproduct of two algebras over their shared base.
#[derive(Clone, Debug)]
pub struct TensorQuotient {
    pub object: SAlgebra,
    /// Injection of the left factor.
    pub left: Homomorphism,
    /// Injection of the right factor.
    pub right: Homomorphism,
    /// The multiset size bound the quotient stabilised at.
    pub bound: usize,
    universe: Vec<TensorElement>,
    index: BTreeMap<TensorElement, usize>,
    class_of: Vec<usize>,
    reps: Vec<TensorElement>,
}

impl TensorQuotient {
    /// The class of a formal sum, after reduction.
    pub fn class_of(&self, pairs: Vec<TensorGenerator>) -> usize {
        let norm = tensor_normalize(self.left.source(), self.right.source(), pairs);
        self.class_of[self.index[&norm]]
    }

    /// A smallest representative of each class, in carrier order.
    pub fn representatives(&self) -> &[TensorElement] {
        &self.reps
    }
}

pub fn tensor_coproduct(a: &SAlgebra, b: &SAlgebra) -> Result<TensorQuotient, TensorError> {
    tensor_coproduct_with(a, b, &TensorOptions::default())
}

pub fn tensor_coproduct_with(
    a: &SAlgebra,
    b: &SAlgebra,
    options: &TensorOptions,
) -> Result<TensorQuotient, TensorError> {
    let balance = match (a.base(), b.base()) {
        (BaseSemiring::Naturals, BaseSemiring::Naturals) => None,
        (BaseSemiring::Finite(s), BaseSemiring::Finite(t)) if s.same_tables(t) => Some((
            a.structure().expect("finite base carries a structure map"),
            b.structure().expect("finite base carries a structure map"),
        )),
        _ => return Err(TensorError::BaseMismatch),
    };
    let (alg_a, alg_b) = (a.algebra(), b.algebra());
    let min_order = alg_a.order().min(alg_b.order());
    let initial = options
        .initial_bound
        .unwrap_or(min_order + 1)
        .max(min_order.saturating_sub(1))
        .max(1);
    let max_bound = initial + options.extra_bounds;

    let mut prev: Option<BoundAttempt> = None;
    for bound in initial..=max_bound {
        let attempt = BoundAttempt::compute(alg_a, alg_b, balance, bound);
        let settled = prev
            .as_ref()
            .is_some_and(|p| p.is_good() && attempt.is_good() && stable(p, &attempt));
        if settled {
            let p = prev.take().expect("just matched");
            return Ok(assemble(a, b, p));
        }
        prev = Some(attempt);
    }
    Err(TensorError::BoundUnstable { max_bound })
}

/// The induced map out of a coproduct, given maps `p` and `r` on the two
/// factors into a common target.
///
/// Every universe element is evaluated and checked against its class, so a
/// disagreement anywhere is reported rather than silently picked over.
pub fn copair(
    q: &TensorQuotient,
    p: &Homomorphism,
    r: &Homomorphism,
) -> Result<Homomorphism, CopairError> {
    if !p.source().same_tables(q.left.source())
        || !r.source().same_tables(q.right.source())
        || !p.target().same_tables(r.target())
    {
        return Err(CopairError::EndpointMismatch);
    }
    let c = p.target();
    let value = |e: &TensorElement| -> usize {
        e.pairs()
            .iter()
            .fold(0, |acc, &(x, y)| c.add(acc, c.mul(p.apply(x), r.apply(y))))
    };
    let map: Vec<usize> = q.reps.iter().map(|e| value(e)).collect();
    for (i, e) in q.universe.iter().enumerate() {
        let got = value(e);
        let expected = map[q.class_of[i]];
        if got != expected {
            return Err(CopairError::IllDefined {
                lhs: expected,
                rhs: got,
            });
        }
    }
    Ok(Homomorphism::validate(q.object.algebra(), c, map)?)
}

struct BoundAttempt {
    bound: usize,
    universe: Vec<TensorElement>,
    index: BTreeMap<TensorElement, usize>,
    class_of: Vec<usize>,
    reps: Vec<TensorElement>,
    algebra: Option<FiniteSemiring>,
    left_map: Vec<usize>,
    right_map: Vec<usize>,
    injections_valid: bool,
    representative_independent: bool,
}

impl BoundAttempt {
    fn is_good(&self) -> bool {
        self.algebra.is_some() && self.injections_valid && self.representative_independent
    }

    fn compute(
        a: &FiniteSemiring,
        b: &FiniteSemiring,
        balance: Option<(&Homomorphism, &Homomorphism)>,
        bound: usize,
    ) -> BoundAttempt {
        let universe = enumerate_universe(a, b, bound);
        let index: BTreeMap<TensorElement, usize> = universe
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        let look = |e: &TensorElement| -> usize {
            *index
                .get(e)
                .expect("reduced elements stay within the bound")
        };

        let mut uf = UnionFind::new(universe.len());
        let mut queue: VecDeque<(usize, usize)> = VecDeque::new();

        fn merge(
            uf: &mut UnionFind,
            queue: &mut VecDeque<(usize, usize)>,
            x: usize,
            y: usize,
        ) {
            if uf.union(x, y) {
                queue.push_back((x, y));
            }
        }

        // Bilinearity: a formal sum equals each of its one-step reductions.
        for (i, e) in universe.iter().enumerate() {
            for m in single_step_merges(a, b, e) {
                merge(&mut uf, &mut queue, i, look(&m));
            }
        }

        // Over a finite base, a scalar slides across any one pair.
        if let Some((fa, fb)) = balance {
            for e in &universe {
                for k in 0..e.size() {
                    let (x, y) = e.pairs()[k];
                    let mut ctx = e.pairs().to_vec();
                    ctx.remove(k);
                    for s in 0..fa.source().order() {
                        let mut lhs = ctx.clone();
                        lhs.push((a.mul(fa.apply(s), x), y));
                        let mut rhs = ctx.clone();
                        rhs.push((x, b.mul(fb.apply(s), y)));
                        let li = look(&tensor_normalize(a, b, lhs));
                        let ri = look(&tensor_normalize(a, b, rhs));
                        merge(&mut uf, &mut queue, li, ri);
                    }
                }
            }
        }

        // Close under both operations: whenever x ~ y, also x+z ~ y+z and
        // x*z ~ y*z for every z.
        while let Some((x, y)) = queue.pop_front() {
            for z in 0..universe.len() {
                let sx = look(&element_sum(a, b, &universe[x], &universe[z]));
                let sy = look(&element_sum(a, b, &universe[y], &universe[z]));
                merge(&mut uf, &mut queue, sx, sy);
                let px = look(&element_product(a, b, &universe[x], &universe[z]));
                let py = look(&element_product(a, b, &universe[y], &universe[z]));
                merge(&mut uf, &mut queue, px, py);
            }
        }

        // Lay out the classes: zero first, one second, the rest in order of
        // their smallest member.
        let zero_root = uf.find(0);
        let one_idx = look(&tensor_normalize(a, b, vec![(a.one(), b.one())]));
        let one_root = uf.find(one_idx);
        let mut class_index: BTreeMap<usize, usize> = BTreeMap::new();
        class_index.insert(zero_root, 0);
        if one_root != zero_root {
            class_index.insert(one_root, 1);
        }
        let mut reps: Vec<TensorElement> = vec![universe[0].clone()];
        if one_root != zero_root {
            reps.push(universe[one_idx].clone());
        }
        let mut class_of = vec![usize::MAX; universe.len()];
        for i in 0..universe.len() {
            let root = uf.find(i);
            let next = class_index.len();
            let ci = *class_index.entry(root).or_insert(next);
            if ci == reps.len() {
                reps.push(universe[i].clone());
            }
            class_of[i] = ci;
        }
        let n = reps.len();

        let mut add_rows = vec![vec![0usize; n]; n];
        let mut mul_rows = vec![vec![0usize; n]; n];
        for i in 0..n {
            for j in 0..n {
                add_rows[i][j] = class_of[look(&element_sum(a, b, &reps[i], &reps[j]))];
                mul_rows[i][j] = class_of[look(&element_product(a, b, &reps[i], &reps[j]))];
            }
        }

        let mut representative_independent = true;
        'outer: for x in 0..universe.len() {
            for y in 0..universe.len() {
                let s = class_of[look(&element_sum(a, b, &universe[x], &universe[y]))];
                let p = class_of[look(&element_product(a, b, &universe[x], &universe[y]))];
                if s != add_rows[class_of[x]][class_of[y]]
                    || p != mul_rows[class_of[x]][class_of[y]]
                {
                    representative_independent = false;
                    break 'outer;
                }
            }
        }

        let algebra = FiniteSemiring::from_rows(None, n, add_rows, mul_rows).ok();

        let left_map: Vec<usize> = a
            .elements()
            .map(|x| class_of[look(&tensor_normalize(a, b, vec![(x, b.one())]))])
            .collect();
        let right_map: Vec<usize> = b
            .elements()
            .map(|y| class_of[look(&tensor_normalize(a, b, vec![(a.one(), y)]))])
            .collect();
        let injections_valid = match &algebra {
            Some(q) => {
                Homomorphism::validate(a, q, left_map.clone()).is_ok()
                    && Homomorphism::validate(b, q, right_map.clone()).is_ok()
            }
            None => false,
        };

        BoundAttempt {
            bound,
            universe,
            index,
            class_of,
            reps,
            algebra,
            left_map,
            right_map,
            injections_valid,
            representative_independent,
        }
    }
}

/// Whether two consecutive good attempts agree: same class count and the
/// inclusion of universes induces an isomorphism of quotients.
fn stable(small: &BoundAttempt, big: &BoundAttempt) -> bool {
    let (qs, qb) = match (&small.algebra, &big.algebra) {
        (Some(x), Some(y)) => (x, y),
        _ => return false,
    };
    if qs.order() != qb.order() {
        return false;
    }
    let phi: Vec<usize> = small
        .reps
        .iter()
        .map(|r| big.class_of[big.index[r]])
        .collect();
    for (i, e) in small.universe.iter().enumerate() {
        if big.class_of[big.index[e]] != phi[small.class_of[i]] {
            return false;
        }
    }
    let mut seen = vec![false; qb.order()];
    for &c in &phi {
        if seen[c] {
            return false;
        }
        seen[c] = true;
    }
    Homomorphism::validate(qs, qb, phi).is_ok()
}

fn assemble(a: &SAlgebra, b: &SAlgebra, att: BoundAttempt) -> TensorQuotient {
    let name = format!("{}+{}", a.label(), b.label());
    let algebra = att
        .algebra
        .expect("only good attempts are assembled")
        .named(&name);
    let left = Homomorphism::validate(a.algebra(), &algebra, att.left_map)
        .expect("validated during the attempt");
    let right = Homomorphism::validate(b.algebra(), &algebra, att.right_map)
        .expect("validated during the attempt");
    let structure = a.structure().map(|f| f.then(&left));
    let object = SAlgebra::new(a.base().clone(), algebra, structure)
        .expect("the quotient is an algebra over the base");
    TensorQuotient {
        object,
        left,
        right,
        bound: att.bound,
        universe: att.universe,
        index: att.index,
        class_of: att.class_of,
        reps: att.reps,
    }
}

/// Every multiset of nonzero generator pairs up to the size bound, sorted.
fn enumerate_universe(a: &FiniteSemiring, b: &FiniteSemiring, bound: usize) -> Vec<TensorElement> {
    let alphabet: Vec<TensorGenerator> = (1..a.order())
        .flat_map(|x| (1..b.order()).map(move |y| (x, y)))
        .collect();
    let mut out = vec![Vec::new()];
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..bound {
        let mut next = Vec::new();
        for seq in &frontier {
            let start = seq.last().copied().unwrap_or(0);
            for i in start..alphabet.len() {
                let mut s = seq.clone();
                s.push(i);
                out.push(s.clone());
                next.push(s);
            }
        }
        frontier = next;
    }
    let mut universe: Vec<TensorElement> = out
        .into_iter()
        .map(|seq| TensorElement(seq.into_iter().map(|i| alphabet[i]).collect()))
        .collect();
    universe.sort_unstable();
    universe
}

/// All one-step bilinearity reductions of `e`.
fn single_step_merges(
    a: &FiniteSemiring,
    b: &FiniteSemiring,
    e: &TensorElement,
) -> Vec<TensorElement> {
    let p = e.pairs();
    let mut out = Vec::new();
    let mut push = |i: usize, j: usize, merged: TensorGenerator| {
        let mut rest: Vec<TensorGenerator> = Vec::with_capacity(p.len() - 1);
        for (k, &pair) in p.iter().enumerate() {
            if k != i && k != j {
                rest.push(pair);
            }
        }
        if merged.0 != 0 && merged.1 != 0 {
            rest.push(merged);
        }
        rest.sort_unstable();
        out.push(TensorElement(rest));
    };
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i].0 == p[j].0 {
                push(i, j, (p[i].0, b.add(p[i].1, p[j].1)));
            }
            if p[i].1 == p[j].1 {
                push(i, j, (a.add(p[i].0, p[j].0), p[i].1));
            }
        }
    }
    out
}

fn element_sum(
    a: &FiniteSemiring,
    b: &FiniteSemiring,
    x: &TensorElement,
    y: &TensorElement,
) -> TensorElement {
    let mut pairs = x.pairs().to_vec();
    pairs.extend_from_slice(y.pairs());
    tensor_normalize(a, b, pairs)
}

fn element_product(
    a: &FiniteSemiring,
    b: &FiniteSemiring,
    x: &TensorElement,
    y: &TensorElement,
) -> TensorElement {
    let mut pairs = Vec::with_capacity(x.size() * y.size());
    for &(x1, y1) in x.pairs() {
        for &(x2, y2) in y.pairs() {
            pairs.push((a.mul(x1, x2), b.mul(y1, y2)));
        }
    }
    tensor_normalize(a, b, pairs)
}
