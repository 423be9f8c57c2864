//! The shared verdict type returned by the three decomposition criteria.

use crate::idempotent::CentralIdempotent;

/// Which sufficient criterion a [`DecompositionVerdict`] reports on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CriterionTag {
    /// Central idempotents generating the low-degree ideals (theorem C).
    CentralIdempotent,
    /// Nondegenerate composition pairings (theorem D and its dual).
    Nondegenerate,
    /// The span-category criterion for EI categories, which reduces to the
    /// nondegeneracy criterion on the span category.
    SpanEi,
}

impl CriterionTag {
    pub fn label(self) -> &'static str {
        match self {
            CriterionTag::CentralIdempotent => "CENTRAL_IDEMPOTENT",
            CriterionTag::Nondegenerate => "NONDEGENERATE",
            CriterionTag::SpanEi => "SPAN_EI",
        }
    }
}

/// One named hypothesis of a criterion, with human-readable witnesses for
/// every pair or object it was checked on.
#[derive(Debug, Clone)]
pub struct ConditionReport {
    pub name: String,
    pub passed: bool,
    pub witnesses: Vec<String>,
}

/// The full outcome of running one decomposition criterion: the
/// per-condition results plus the structural data (idempotents, the
/// `dim Hom(Delta_x, Delta_y)` table, endomorphism vs. local-algebra
/// dimensions, projectivity of each standard module) that the criterion is
/// supposed to control.
///
/// When `passed` is true the constructor has already asserted the promised
/// consequences: the hom table is diagonal, `dim End(Delta_x) = dim A_x0`,
/// and every standard module is projective.
#[derive(Debug, Clone)]
pub struct DecompositionVerdict {
    pub criterion: CriterionTag,
    pub conditions: Vec<ConditionReport>,
    /// Central idempotents `e_x` (with complements `f_x`) where they exist,
    /// indexed by object.
    pub idempotents: Vec<Option<CentralIdempotent>>,
    /// `hom_table[x][y] = dim Hom(Delta_x, Delta_y)`.
    pub hom_table: Vec<Vec<usize>>,
    /// `end_dims[x] = dim End(Delta_x)` (the diagonal of the table).
    pub end_dims: Vec<usize>,
    /// `local_dims[x] = dim A_x0`.
    pub local_dims: Vec<usize>,
    /// Whether each `Delta_x` is projective, decided by the vanishing of
    /// `Ext^1(Delta_x, i_x)` together with an explicit splitting of the
    /// defining sequence.
    pub delta_projective: Vec<bool>,
    pub passed: bool,
}

impl DecompositionVerdict {
    /// Looks up a condition by name.
    pub fn condition(&self, name: &str) -> Option<&ConditionReport> {
        self.conditions.iter().find(|c| c.name == name)
    }

    /// True when the hom table vanishes off the diagonal.
    pub fn orthogonal(&self) -> bool {
        self.hom_table
            .iter()
            .enumerate()
            .all(|(x, row)| row.iter().enumerate().all(|(y, &d)| x == y || d == 0))
    }
}
