//! Writer for the CPLEX LP text format read by most MILP solvers.

use std::io::{self, Write};

use super::ilp::{IlpModel, Var};

/// Terms per output line; keeps lines well under the 255-character limit
/// some readers impose.
const TERMS_PER_LINE: usize = 8;

/// Writes `model` in LP format. Constraints are named `c0, c1, ...` in model
/// order; variables are `x_i_j` and `y_i` with 0-based indices. The output
/// depends only on the model.
pub fn export_lp<W: Write>(model: &IlpModel, mut sink: W) -> io::Result<()> {
    writeln!(
        sink,
        "\\ LFCS 0-1 model: |A| = {}, |B| = {}",
        model.a_len(),
        model.b_len()
    )?;
    writeln!(sink, "Maximize")?;
    let objective: Vec<Var> = (0..model.a_len())
        .map(Var::Y)
        .chain((0..model.x_vars().len()).map(Var::X))
        .collect();
    write!(sink, " obj:")?;
    if objective.is_empty() {
        // An empty linear expression is not accepted by every reader.
        write!(sink, " 0")?;
    } else {
        write_terms(model, &objective, &mut sink)?;
    }
    writeln!(sink)?;

    writeln!(sink, "Subject To")?;
    for (seq, c) in model.constraints().iter().enumerate() {
        write!(sink, " c{seq}:")?;
        write_terms(model, &c.vars, &mut sink)?;
        writeln!(sink, " <= {}", c.rhs)?;
    }

    let fixed: Vec<usize> = (0..model.a_len()).filter(|&i| model.y_fixed_zero(i)).collect();
    if !fixed.is_empty() {
        writeln!(sink, "Bounds")?;
        for i in fixed {
            writeln!(sink, " y_{i} = 0")?;
        }
    }

    writeln!(sink, "Binary")?;
    for var in &objective {
        writeln!(sink, " {}", model.var_name(*var))?;
    }
    writeln!(sink, "End")
}

fn write_terms<W: Write>(model: &IlpModel, vars: &[Var], sink: &mut W) -> io::Result<()> {
    for (k, var) in vars.iter().enumerate() {
        if k > 0 {
            if k % TERMS_PER_LINE == 0 {
                write!(sink, "\n   ")?;
            }
            write!(sink, " +")?;
        }
        write!(sink, " {}", model.var_name(*var))?;
    }
    Ok(())
}
