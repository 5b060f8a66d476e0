//! The 2×2 discrete phase space.
//!
//! Four points (j, k) over the binary field, three striations of parallel
//! lines (rows, columns, diagonals), one mutually unbiased basis per
//! striation, and the Hermitian phase-point operators built by summing the
//! line projectors through a point and subtracting the identity.

use crate::linalg::{Complex64, ComplexMatrix};

/// A point (j, k) of the 2×2 phase space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PhasePoint {
    j: u8,
    k: u8,
}

impl PhasePoint {
    /// All four points, in row-major order (0,0), (0,1), (1,0), (1,1).
    pub const ALL: [PhasePoint; 4] = [
        PhasePoint { j: 0, k: 0 },
        PhasePoint { j: 0, k: 1 },
        PhasePoint { j: 1, k: 0 },
        PhasePoint { j: 1, k: 1 },
    ];

    /// Build a point; coordinates are reduced mod 2.
    pub fn new(j: u8, k: u8) -> Self {
        Self { j: j & 1, k: k & 1 }
    }

    pub fn j(&self) -> u8 {
        self.j
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    /// Position in the canonical [`PhasePoint::ALL`] order.
    pub fn index(&self) -> usize {
        (self.j as usize) * 2 + self.k as usize
    }
}

impl std::fmt::Display for PhasePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.j, self.k)
    }
}

/// The three families of parallel lines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StriationKind {
    /// Lines of fixed j, carrying the computational (z) basis.
    ZRows,
    /// Lines of fixed k, carrying the x basis.
    XColumns,
    /// Lines of fixed j⊕k, carrying the y basis.
    YDiagonals,
}

impl StriationKind {
    pub const ALL: [StriationKind; 3] = [
        StriationKind::ZRows,
        StriationKind::XColumns,
        StriationKind::YDiagonals,
    ];
}

/// A two-point line of the phase space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Line {
    kind: StriationKind,
    index: u8,
    points: [PhasePoint; 2],
}

impl Line {
    /// The line of the given striation with the given label (0 or 1).
    pub fn new(kind: StriationKind, index: u8) -> Self {
        let index = index & 1;
        let points = match kind {
            StriationKind::ZRows => [PhasePoint::new(index, 0), PhasePoint::new(index, 1)],
            StriationKind::XColumns => [PhasePoint::new(0, index), PhasePoint::new(1, index)],
            StriationKind::YDiagonals => {
                [PhasePoint::new(0, index), PhasePoint::new(1, index ^ 1)]
            }
        };
        Self {
            kind,
            index,
            points,
        }
    }

    pub fn kind(&self) -> StriationKind {
        self.kind
    }

    pub fn index(&self) -> u8 {
        self.index
    }

    pub fn points(&self) -> [PhasePoint; 2] {
        self.points
    }

    pub fn contains(&self, p: PhasePoint) -> bool {
        self.points.contains(&p)
    }
}

/// A striation: two parallel lines plus the orthonormal basis attached to
/// them, stored as rank-1 projectors.
#[derive(Debug, Clone)]
pub struct Striation {
    kind: StriationKind,
    lines: [Line; 2],
    basis: [ComplexMatrix; 2],
}

impl Striation {
    pub fn kind(&self) -> StriationKind {
        self.kind
    }

    pub fn lines(&self) -> &[Line; 2] {
        &self.lines
    }

    /// Projectors onto the two basis states, indexed by line label.
    pub fn basis(&self) -> &[ComplexMatrix; 2] {
        &self.basis
    }
}

/// Operator-basis variant: the plain family or its transposed partner.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    A,
    B,
}

impl Variant {
    pub const BOTH: [Variant; 2] = [Variant::A, Variant::B];
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Variant::A => write!(f, "A"),
            Variant::B => write!(f, "B"),
        }
    }
}

/// Hermitian phase-point operator attached to one point of the phase space.
#[derive(Debug, Clone)]
pub struct PhasePointOperator {
    point: PhasePoint,
    variant: Variant,
    matrix: ComplexMatrix,
}

impl PhasePointOperator {
    pub fn point(&self) -> PhasePoint {
        self.point
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }
}

/// The three lines through a point, one per striation.
pub fn lines_through(p: PhasePoint) -> [Line; 3] {
    [
        Line::new(StriationKind::ZRows, p.j()),
        Line::new(StriationKind::XColumns, p.k()),
        Line::new(StriationKind::YDiagonals, p.j() ^ p.k()),
    ]
}

/// Projector onto the pure state assigned to a line.
///
/// Rows carry the computational basis (|0⟩, |1⟩ by row label), columns the
/// x basis (|+⟩ on label 0, |−⟩ on label 1), diagonals the y basis
/// (|+i⟩ on label 0, |−i⟩ on label 1). This is the unique natural assignment
/// under which the summed line projectors reproduce the canonical
/// phase-point operator matrices; the regression fixtures pin it down.
pub fn line_state(line: &Line) -> ComplexMatrix {
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let half = Complex64::new(0.5, 0.0);
    match (line.kind(), line.index()) {
        (StriationKind::ZRows, 0) => ComplexMatrix::from_2x2(one, zero, zero, zero),
        (StriationKind::ZRows, _) => ComplexMatrix::from_2x2(zero, zero, zero, one),
        (StriationKind::XColumns, 0) => ComplexMatrix::from_2x2(half, half, half, half),
        (StriationKind::XColumns, _) => ComplexMatrix::from_2x2(half, -half, -half, half),
        (StriationKind::YDiagonals, 0) => ComplexMatrix::from_2x2(
            half,
            Complex64::new(0.0, -0.5),
            Complex64::new(0.0, 0.5),
            half,
        ),
        (StriationKind::YDiagonals, _) => ComplexMatrix::from_2x2(
            half,
            Complex64::new(0.0, 0.5),
            Complex64::new(0.0, -0.5),
            half,
        ),
    }
}

/// The three striations with their bases attached.
pub fn striations() -> [Striation; 3] {
    StriationKind::ALL.map(|kind| {
        let lines = [Line::new(kind, 0), Line::new(kind, 1)];
        let basis = [line_state(&lines[0]), line_state(&lines[1])];
        Striation { kind, lines, basis }
    })
}

/// The phase-point operator at `p`: the sum of the line projectors through
/// `p` minus the identity, transposed for [`Variant::B`].
pub fn phase_point_operator(p: PhasePoint, variant: Variant) -> PhasePointOperator {
    let mut sum = ComplexMatrix::zeros(2, 2);
    for line in lines_through(p) {
        sum = sum.add(&line_state(&line)).expect("2x2");
    }
    let a = sum.sub(&ComplexMatrix::identity(2)).expect("2x2");
    let matrix = match variant {
        Variant::A => a,
        Variant::B => a.transpose(),
    };
    PhasePointOperator {
        point: p,
        variant,
        matrix,
    }
}

/// All four phase-point operators of one variant, in canonical point order.
pub fn phase_point_operators(variant: Variant) -> [PhasePointOperator; 4] {
    PhasePoint::ALL.map(|p| phase_point_operator(p, variant))
}
