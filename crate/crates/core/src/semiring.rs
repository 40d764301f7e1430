//! Finite commutative semirings as explicit operation tables.
//!
//! The carrier of an order-`n` semiring is `{0, .., n-1}` with index 0 the
//! additive identity and index 1 the multiplicative identity (for `n == 1`
//! the two coincide). Every constructor validates the axioms, so a value of
//! [`FiniteSemiring`] is always a genuine commutative semiring.

use std::fmt;

use crate::hom::Homomorphism;

/// Which operation table a violation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpKind {
    Add,
    Mul,
}

impl fmt::Display for OpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpKind::Add => write!(f, "add"),
            OpKind::Mul => write!(f, "mul"),
        }
    }
}

/// A single violated axiom together with a witness instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    /// Table is not `n x n` or holds an entry outside `{0, .., n-1}`.
    MalformedTable { op: OpKind, detail: String },
    NonAssociative { op: OpKind, witness: (usize, usize, usize) },
    NonCommutative { op: OpKind, witness: (usize, usize) },
    /// The pinned identity element (0 for add, 1 for mul) fails its law.
    BadIdentityElement { op: OpKind, witness: usize },
    /// `x * 0 != 0` at the witness.
    AbsorptionFails { witness: usize },
    /// `x * (y + z) != x*y + x*z` at the witness triple.
    DistributivityFails { witness: (usize, usize, usize) },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::MalformedTable { op, detail } => {
                write!(f, "malformed {op} table: {detail}")
            }
            AxiomViolation::NonAssociative { op, witness: (x, y, z) } => {
                write!(f, "{op} is not associative at ({x}, {y}, {z})")
            }
            AxiomViolation::NonCommutative { op, witness: (x, y) } => {
                write!(f, "{op} is not commutative at ({x}, {y})")
            }
            AxiomViolation::BadIdentityElement { op, witness } => {
                let e = match op {
                    OpKind::Add => 0,
                    OpKind::Mul => 1,
                };
                write!(f, "{op} identity law fails: element {e} at {witness}")
            }
            AxiomViolation::AbsorptionFails { witness } => {
                write!(f, "absorption fails: {witness} * 0 != 0")
            }
            AxiomViolation::DistributivityFails { witness: (x, y, z) } => {
                write!(f, "distributivity fails at ({x}, {y}, {z})")
            }
        }
    }
}

/// Every violated axiom, one witness each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<AxiomViolation>,
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not a commutative semiring:")?;
        for v in &self.violations {
            write!(f, "\n  {v}")?;
        }
        Ok(())
    }
}

impl std::error::Error for ValidationReport {}

/// Checks the commutative-semiring axioms on raw tables.
///
/// Reports every violated axiom with one witness each, in a fixed order, so
/// the outcome is deterministic for a given input.
pub fn validate_semiring(
    order: usize,
    add: &[Vec<usize>],
    mul: &[Vec<usize>],
) -> Result<(), ValidationReport> {
    let mut violations = Vec::new();

    if order == 0 {
        violations.push(AxiomViolation::MalformedTable {
            op: OpKind::Add,
            detail: "order must be at least 1".into(),
        });
        return Err(ValidationReport { violations });
    }
    for (op, table) in [(OpKind::Add, add), (OpKind::Mul, mul)] {
        if table.len() != order || table.iter().any(|row| row.len() != order) {
            violations.push(AxiomViolation::MalformedTable {
                op,
                detail: format!("expected {order} rows of {order} entries"),
            });
        } else if let Some((i, j)) = (0..order)
            .flat_map(|i| (0..order).map(move |j| (i, j)))
            .find(|&(i, j)| table[i][j] >= order)
        {
            violations.push(AxiomViolation::MalformedTable {
                op,
                detail: format!("entry at ({i}, {j}) is {} >= {order}", table[i][j]),
            });
        }
    }
    if !violations.is_empty() {
        return Err(ValidationReport { violations });
    }

    let one = if order == 1 { 0 } else { 1 };
    let idents = [(OpKind::Add, add, 0), (OpKind::Mul, mul, one)];
    for (op, table, e) in idents {
        if let Some(x) = (0..order).find(|&x| table[e][x] != x || table[x][e] != x) {
            violations.push(AxiomViolation::BadIdentityElement { op, witness: x });
        }
    }
    for (op, table) in [(OpKind::Add, add), (OpKind::Mul, mul)] {
        if let Some(w) = (0..order)
            .flat_map(|x| (0..order).map(move |y| (x, y)))
            .find(|&(x, y)| table[x][y] != table[y][x])
        {
            violations.push(AxiomViolation::NonCommutative { op, witness: w });
        }
        if let Some(w) = (0..order)
            .flat_map(|x| (0..order).flat_map(move |y| (0..order).map(move |z| (x, y, z))))
            .find(|&(x, y, z)| table[table[x][y]][z] != table[x][table[y][z]])
        {
            violations.push(AxiomViolation::NonAssociative { op, witness: w });
        }
    }
    if let Some(x) = (0..order).find(|&x| mul[x][0] != 0 || mul[0][x] != 0) {
        violations.push(AxiomViolation::AbsorptionFails { witness: x });
    }
    if let Some(w) = (0..order)
        .flat_map(|x| (0..order).flat_map(move |y| (0..order).map(move |z| (x, y, z))))
        .find(|&(x, y, z)| mul[x][add[y][z]] != add[mul[x][y]][mul[x][z]])
    {
        violations.push(AxiomViolation::DistributivityFails { witness: w });
    }

    if violations.is_empty() {
        Ok(())
    } else {
        Err(ValidationReport { violations })
    }
}

/// A validated finite commutative semiring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteSemiring {
    name: Option<String>,
    order: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
}

impl FiniteSemiring {
    /// Builds a semiring from row-major tables, validating the axioms.
    pub fn from_rows(
        name: Option<&str>,
        order: usize,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
    ) -> Result<Self, ValidationReport> {
        validate_semiring(order, &add, &mul)?;
        Ok(FiniteSemiring {
            name: name.map(str::to_owned),
            order,
            add: add.into_iter().flatten().collect(),
            mul: mul.into_iter().flatten().collect(),
        })
    }

    /// Builds a semiring from closures over `{0, .., order-1}`.
    pub fn from_fn(
        name: Option<&str>,
        order: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, ValidationReport> {
        let table = |f: &dyn Fn(usize, usize) -> usize| {
            (0..order)
                .map(|i| (0..order).map(|j| f(i, j)).collect())
                .collect()
        };
        Self::from_rows(name, order, table(&add), table(&mul))
    }

    /// Re-checks the axioms; always `Ok` for values built by this module.
    pub fn check(&self) -> Result<(), ValidationReport> {
        validate_semiring(self.order, &self.add_rows(), &self.mul_rows())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// The display name, falling back to `?` for anonymous values.
    pub fn label(&self) -> &str {
        self.name.as_deref().unwrap_or("?")
    }

    pub fn named(mut self, name: &str) -> Self {
        self.name = Some(name.to_owned());
        self
    }

    /// The multiplicative identity: index 1, or 0 when the order is 1.
    pub fn one(&self) -> usize {
        if self.order == 1 {
            0
        } else {
            1
        }
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.order + y]
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// `x + x`, the doubling used by several identities.
    pub fn double(&self, x: usize) -> usize {
        self.add(x, x)
    }

    /// Table equality, ignoring names.
    pub fn same_tables(&self, other: &FiniteSemiring) -> bool {
        self.order == other.order && self.add == other.add && self.mul == other.mul
    }

    pub fn add_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|i| self.add[i * self.order..(i + 1) * self.order].to_vec())
            .collect()
    }

    pub fn mul_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|i| self.mul[i * self.order..(i + 1) * self.order].to_vec())
            .collect()
    }
}

impl fmt::Debug for FiniteSemiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteSemiring({}, order {})", self.label(), self.order)
    }
}

/// Renders the parseable text block: `semiring NAME`, `order N`, both tables.
impl fmt::Display for FiniteSemiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "semiring {}", self.label())?;
        writeln!(f, "order {}", self.order)?;
        for (header, table) in [("add", &self.add), ("mul", &self.mul)] {
            writeln!(f, "{header}")?;
            for i in 0..self.order {
                let row: Vec<String> = (0..self.order)
                    .map(|j| table[i * self.order + j].to_string())
                    .collect();
                writeln!(f, "{}", row.join(" "))?;
            }
        }
        Ok(())
    }
}

/// The componentwise product, re-indexed so that `(0,0)` sits at 0 and
/// `(1,1)` at 1, together with the two projection homomorphisms.
pub fn direct_product(
    a: &FiniteSemiring,
    b: &FiniteSemiring,
) -> (FiniteSemiring, Homomorphism, Homomorphism) {
    let (n, m) = (a.order(), b.order());
    let raw = |i: usize, j: usize| i * m + j;
    let unit = raw(a.one(), b.one());

    // Pair indices in row-major order, with the two identities pulled to the
    // front so the carrier convention holds.
    let mut layout: Vec<usize> = vec![raw(0, 0)];
    if unit != raw(0, 0) {
        layout.push(unit);
    }
    layout.extend((0..n * m).filter(|&p| p != raw(0, 0) && p != unit));
    let mut position = vec![0usize; n * m];
    for (pos, &p) in layout.iter().enumerate() {
        position[p] = pos;
    }

    let component = |pos: usize| (layout[pos] / m, layout[pos] % m);
    let name = format!("{}x{}", a.label(), b.label());
    let product = FiniteSemiring::from_fn(
        Some(&name),
        n * m,
        |x, y| {
            let ((xa, xb), (ya, yb)) = (component(x), component(y));
            position[raw(a.add(xa, ya), b.add(xb, yb))]
        },
        |x, y| {
            let ((xa, xb), (ya, yb)) = (component(x), component(y));
            position[raw(a.mul(xa, ya), b.mul(xb, yb))]
        },
    )
    .expect("componentwise tables satisfy the axioms");

    let first = (0..n * m).map(|pos| component(pos).0).collect();
    let second = (0..n * m).map(|pos| component(pos).1).collect();
    let p1 = Homomorphism::validate(&product, a, first).expect("first projection");
    let p2 = Homomorphism::validate(&product, b, second).expect("second projection");
    (product, p1, p2)
}
