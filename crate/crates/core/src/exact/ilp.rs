//! 0-1 integer program for LFCS.
//!
//! `x(i,j) = 1` aligns `A[i]` with `B[j]` and `y(i) = 1` matches `A[i]`
//! with a symbol of `M`. The objective maximizes `Σ y + Σ x` subject to
//! non-crossing alignment pairs, at most one partner per position of `A`
//! and of `B`, and the per-symbol supply of `M`.

use crate::sequence::Instance;
use crate::solution::{DeletionSolution, ScoredSolution};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// Index into [`IlpModel::x_vars`].
    X(usize),
    /// Position in `A`.
    Y(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConstraintFamily {
    /// `x(i,j) + x(k,l) ≤ 1` for `i < k`, `j > l`.
    NonCrossing,
    /// `y(i) + Σ_j x(i,j) ≤ 1`.
    Row,
    /// `Σ_i x(i,j) ≤ 1`.
    Column,
    /// `Σ_{A[i] = σ} y(i) ≤ |M|_σ`.
    Capacity,
}

/// `Σ vars ≤ rhs`; every coefficient in this model is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub family: ConstraintFamily,
    pub vars: Vec<Var>,
    pub rhs: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IlpModel {
    n: usize,
    m: usize,
    x_vars: Vec<(usize, usize)>,
    y_fixed_zero: Vec<bool>,
    constraints: Vec<Constraint>,
}

/// A 0-1 value for every model variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    pub x: Vec<bool>,
    pub y: Vec<bool>,
}

pub fn build_ilp(instance: &Instance) -> IlpModel {
    let (a, b) = (instance.a(), instance.b());
    let (n, m) = (a.len(), b.len());
    let multiset = instance.multiset();

    // Pairs of unequal symbols can never be aligned, so they get no variable.
    let x_vars: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..m).filter(move |&j| a[i] == b[j]).map(move |j| (i, j)))
        .collect();
    // Symbols absent from M cannot be matched with it.
    let y_fixed_zero: Vec<bool> = a.iter().map(|&s| multiset.count(s) == 0).collect();

    let mut constraints = Vec::new();
    for (p, &(i, j)) in x_vars.iter().enumerate() {
        for (q, &(k, l)) in x_vars.iter().enumerate().skip(p + 1) {
            if i < k && j > l {
                constraints.push(Constraint {
                    family: ConstraintFamily::NonCrossing,
                    vars: vec![Var::X(p), Var::X(q)],
                    rhs: 1,
                });
            }
        }
    }

    let mut by_row: Vec<Vec<Var>> = (0..n).map(|i| vec![Var::Y(i)]).collect();
    let mut by_col: Vec<Vec<Var>> = vec![Vec::new(); m];
    for (p, &(i, j)) in x_vars.iter().enumerate() {
        by_row[i].push(Var::X(p));
        by_col[j].push(Var::X(p));
    }
    constraints.extend(by_row.into_iter().map(|vars| Constraint {
        family: ConstraintFamily::Row,
        vars,
        rhs: 1,
    }));
    constraints.extend(by_col.into_iter().filter(|v| !v.is_empty()).map(|vars| Constraint {
        family: ConstraintFamily::Column,
        vars,
        rhs: 1,
    }));

    for (symbol, supply) in multiset.iter() {
        let vars: Vec<Var> = (0..n).filter(|&i| a[i] == symbol).map(Var::Y).collect();
        if !vars.is_empty() {
            constraints.push(Constraint {
                family: ConstraintFamily::Capacity,
                vars,
                rhs: supply,
            });
        }
    }

    IlpModel {
        n,
        m,
        x_vars,
        y_fixed_zero,
        constraints,
    }
}

impl IlpModel {
    /// `|A|`, which is also the number of `y` variables.
    pub fn a_len(&self) -> usize {
        self.n
    }

    pub fn b_len(&self) -> usize {
        self.m
    }

    /// `(i, j)` of every declared `x` variable, in row-major order.
    pub fn x_vars(&self) -> &[(usize, usize)] {
        &self.x_vars
    }

    /// Whether `y(i)` is bounded to zero because `A[i]` does not occur in `M`.
    pub fn y_fixed_zero(&self, i: usize) -> bool {
        self.y_fixed_zero[i]
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn family_count(&self, family: ConstraintFamily) -> usize {
        self.constraints.iter().filter(|c| c.family == family).count()
    }

    pub fn var_name(&self, var: Var) -> String {
        match var {
            Var::X(p) => {
                let (i, j) = self.x_vars[p];
                format!("x_{i}_{j}")
            }
            Var::Y(i) => format!("y_{i}"),
        }
    }

    fn value(assignment: &Assignment, var: Var) -> bool {
        match var {
            Var::X(p) => assignment.x[p],
            Var::Y(i) => assignment.y[i],
        }
    }

    pub fn objective(&self, assignment: &Assignment) -> usize {
        assignment.x.iter().chain(&assignment.y).filter(|&&v| v).count()
    }

    pub fn is_feasible(&self, assignment: &Assignment) -> bool {
        assignment.x.len() == self.x_vars.len()
            && assignment.y.len() == self.n
            && assignment
                .y
                .iter()
                .zip(&self.y_fixed_zero)
                .all(|(&y, &fixed)| !(y && fixed))
            && self
                .constraints
                .iter()
                .all(|c| c.vars.iter().filter(|&&v| Self::value(assignment, v)).count() <= c.rhs)
    }

    /// The deletion set (`y`) and alignment (`x`) an assignment encodes.
    pub fn decode(&self, assignment: &Assignment) -> (DeletionSolution, Vec<(usize, usize)>) {
        let deleted = DeletionSolution::from_mask(&assignment.y);
        let alignment = self
            .x_vars
            .iter()
            .zip(&assignment.x)
            .filter(|(_, &on)| on)
            .map(|(&pair, _)| pair)
            .collect();
        (deleted, alignment)
    }

    /// The assignment for an evaluated solution with its alignment witness.
    pub fn encode(&self, scored: &ScoredSolution) -> Assignment {
        let alignment = scored.alignment().expect("encoding needs an alignment witness");
        let x = self.x_vars.iter().map(|pair| alignment.contains(pair)).collect();
        let y = scored.solution().to_mask(self.n);
        Assignment { x, y }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::match_capacity;
    use crate::exact::solve_enumeration;
    use crate::lcs::lcs_length;
    use crate::solution::evaluate_solution;

    fn inst(a: &str, b: &str, m: &str) -> Instance {
        Instance::from_glyphs(a, b, m).unwrap()
    }

    /// Best objective over all 0-1 assignments.
    fn model_optimum(model: &IlpModel) -> usize {
        let nx = model.x_vars().len();
        let total = nx + model.a_len();
        assert!(total <= 20);
        (0u32..1 << total)
            .filter_map(|bits| {
                let a = Assignment {
                    x: (0..nx).map(|p| bits >> p & 1 == 1).collect(),
                    y: (0..model.a_len()).map(|i| bits >> (nx + i) & 1 == 1).collect(),
                };
                model.is_feasible(&a).then(|| model.objective(&a))
            })
            .max()
            .unwrap()
    }

    #[test]
    fn small_model_shape() {
        let model = build_ilp(&inst("ab", "b", "a"));
        assert_eq!(model.x_vars(), &[(1, 0)]);
        assert_eq!(model.a_len(), 2);
        assert_eq!(model.family_count(ConstraintFamily::NonCrossing), 0);
        assert_eq!(model.family_count(ConstraintFamily::Row), 2);
        assert_eq!(model.family_count(ConstraintFamily::Column), 1);
        assert_eq!(model.family_count(ConstraintFamily::Capacity), 1);
        assert!(!model.y_fixed_zero(0));
        assert!(model.y_fixed_zero(1));
        assert_eq!(model_optimum(&model), 2);
    }

    #[test]
    fn empty_b_leaves_only_matching_with_m() {
        let i = inst("aabca", "", "abb");
        let model = build_ilp(&i);
        assert!(model.x_vars().is_empty());
        assert_eq!(model_optimum(&model), match_capacity(&i).total());
    }

    #[test]
    fn empty_m_reduces_to_lcs() {
        let i = inst("abcab", "bacb", "");
        let model = build_ilp(&i);
        assert_eq!(model.family_count(ConstraintFamily::Capacity), 0);
        assert_eq!(model_optimum(&model), lcs_length(i.a(), i.b()));
    }

    #[test]
    fn non_crossing_pairs() {
        // Only x(0,1) and x(1,0) cross.
        let model = build_ilp(&inst("aba", "ba", ""));
        assert_eq!(model.x_vars(), &[(0, 1), (1, 0), (2, 1)]);
        let crossing: Vec<Vec<Var>> = model
            .constraints()
            .iter()
            .filter(|c| c.family == ConstraintFamily::NonCrossing)
            .map(|c| c.vars.clone())
            .collect();
        assert_eq!(crossing, vec![vec![Var::X(0), Var::X(1)]]);
    }

    #[test]
    fn enumeration_optimum_matches_model() {
        for (a, b, m) in [
            ("abab", "ba", "a"),
            ("aabb", "ab", "ab"),
            ("abc", "cab", "c"),
            ("abba", "ab", "bb"),
        ] {
            let i = inst(a, b, m);
            let model = build_ilp(&i);
            let best = solve_enumeration(&i, 1000).unwrap();
            assert_eq!(model_optimum(&model), best.value(), "{a} {b} {m}");
            let enc = model.encode(&best);
            assert!(model.is_feasible(&enc));
            assert_eq!(model.objective(&enc), best.value());
            let (del, al) = model.decode(&enc);
            assert_eq!(&del, best.solution());
            assert_eq!(Some(&al[..]), best.alignment());
            let reevaluated = evaluate_solution(&i, &del).unwrap();
            assert_eq!(reevaluated.value(), best.value());
        }
    }
}
