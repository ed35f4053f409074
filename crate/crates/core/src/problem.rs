//! Declarative problem files: field, ring, named definitions, a module, a
//! group action, and a list of tasks.

use std::collections::BTreeMap;

use num::BigRational;
use serde::Deserialize;

use crate::character::{cycle_type, symmetric_group_table};
use crate::equivariant::{
    betti_characters_at, betti_characters_opts, module_character, molien_check,
    BettiCharacterTable, GroupAction, SubquotientModule,
};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement, FieldSpec};
use crate::ideal::Ideal;
use crate::matrix::{hessian_det_scaled, jacobian, minors, PolyMatrix};
use crate::parse::{element_parse, poly_parse};
use crate::poly::{LinearSubstitution, Polynomial};
use crate::resolution::{free_resolution, ChainComplex};
use crate::ring::{Ring, RingContext};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProblemFile {
    field: Option<FieldBlock>,
    ring: RingBlock,
    #[serde(default)]
    define: Vec<DefineBlock>,
    module: ModuleBlock,
    group: Option<GroupBlock>,
    #[serde(default)]
    task: Vec<TaskBlock>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FieldBlock {
    kind: String,
    generator: Option<String>,
    min_poly: Option<String>,
    cyclotomic_order: Option<u32>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RingBlock {
    variables: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct DefineBlock {
    name: String,
    poly: Option<String>,
    ideal: Option<Vec<String>>,
    jacobian_of: Option<Vec<String>>,
    hessian_det_scaled: Option<HessianSpec>,
    minors: Option<MinorsSpec>,
    power: Option<PowerSpec>,
    symbolic_power: Option<PowerSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct HessianSpec {
    of: String,
    scale: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MinorsSpec {
    size: usize,
    of: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PowerSpec {
    of: String,
    exponent: u32,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleBlock {
    quotient_of: Option<String>,
    subquotient: Option<SubquotientSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SubquotientSpec {
    numerator: String,
    denominator: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupBlock {
    order: Option<u64>,
    class_sizes: Option<Vec<u64>>,
    #[serde(default)]
    element: Vec<ElementBlock>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ElementBlock {
    name: String,
    sub: Option<Vec<String>>,
    matrix: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TaskBlock {
    kind: String,
    homological_degree: Option<usize>,
    degrees: Option<Vec<u32>>,
    bound: Option<u32>,
    against: Option<String>,
}

#[derive(Debug, Clone)]
pub enum Task {
    BettiTable,
    BettiCharacters { homological_degree: Option<usize> },
    ModuleCharacter { degrees: Vec<u32> },
    MolienCheck { bound: Option<u32> },
    Decompose { homological_degree: Option<usize> },
}

#[derive(Debug, Clone)]
enum Value {
    Poly(Polynomial),
    Ideal(Ideal),
    Matrix(PolyMatrix),
}

pub struct Problem {
    pub field: Field,
    pub ring: Ring,
    pub module: SubquotientModule,
    pub action: Option<GroupAction>,
    pub tasks: Vec<Task>,
}

fn schema_err(msg: impl Into<String>) -> Error {
    Error::Parse {
        pos: 0,
        msg: msg.into(),
    }
}

fn build_field(block: Option<&FieldBlock>) -> Result<Field> {
    let Some(b) = block else {
        return Ok(FieldSpec::rational());
    };
    match b.kind.as_str() {
        "rational" => Ok(FieldSpec::rational()),
        "extension" => {
            let generator = b
                .generator
                .clone()
                .ok_or_else(|| schema_err("extension field requires a generator name"))?;
            let src = b
                .min_poly
                .as_ref()
                .ok_or_else(|| schema_err("extension field requires min_poly"))?;
            // parse the minimal polynomial over Q in the generator variable
            let scratch = RingContext::new(FieldSpec::rational(), vec![generator.clone()])?;
            let p = poly_parse(src, &scratch)?;
            let deg = p
                .total_degree()
                .ok_or_else(|| schema_err("min_poly must be nonzero"))?
                as usize;
            let mut coeffs = vec![BigRational::from_integer(0.into()); deg + 1];
            for (c, m) in &p.terms {
                coeffs[m.degree() as usize] = scratch
                    .field
                    .as_rational(c)
                    .ok_or_else(|| schema_err("min_poly must have rational coefficients"))?;
            }
            FieldSpec::extension(&generator, coeffs, b.cyclotomic_order.map(u64::from))
        }
        other => Err(schema_err(format!("unknown field kind {other:?}"))),
    }
}

struct Definitions {
    ring: Ring,
    values: Vec<(String, Value)>,
}

impl Definitions {
    fn get(&self, name: &str) -> Result<&Value> {
        self.values
            .iter()
            .rev()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v)
            .ok_or_else(|| schema_err(format!("reference to undefined name {name:?}")))
    }

    /// A name or an inline polynomial expression.
    fn poly(&self, src: &str) -> Result<Polynomial> {
        if let Ok(Value::Poly(p)) = self.get(src) {
            return Ok(p.clone());
        }
        poly_parse(src, &self.ring)
    }

    fn ideal(&self, name: &str) -> Result<Ideal> {
        match self.get(name)? {
            Value::Ideal(i) => Ok(i.clone()),
            Value::Poly(p) => Ok(Ideal::new(&self.ring, vec![p.clone()])),
            Value::Matrix(_) => Err(schema_err(format!("{name:?} is a matrix, not an ideal"))),
        }
    }

    fn matrix(&self, name: &str) -> Result<&PolyMatrix> {
        match self.get(name)? {
            Value::Matrix(m) => Ok(m),
            _ => Err(schema_err(format!("{name:?} is not a matrix"))),
        }
    }

    fn add(&mut self, block: &DefineBlock) -> Result<()> {
        let forms = [
            block.poly.is_some(),
            block.ideal.is_some(),
            block.jacobian_of.is_some(),
            block.hessian_det_scaled.is_some(),
            block.minors.is_some(),
            block.power.is_some(),
            block.symbolic_power.is_some(),
        ];
        if forms.iter().filter(|f| **f).count() != 1 {
            return Err(schema_err(format!(
                "definition {:?} must use exactly one construction",
                block.name
            )));
        }
        let value = if let Some(src) = &block.poly {
            Value::Poly(poly_parse(src, &self.ring)?)
        } else if let Some(srcs) = &block.ideal {
            let gens = srcs.iter().map(|s| self.poly(s)).collect::<Result<_>>()?;
            Value::Ideal(Ideal::new(&self.ring, gens))
        } else if let Some(srcs) = &block.jacobian_of {
            let fs: Vec<Polynomial> = srcs.iter().map(|s| self.poly(s)).collect::<Result<_>>()?;
            Value::Matrix(jacobian(&self.ring, &fs)?)
        } else if let Some(h) = &block.hessian_det_scaled {
            let f = self.poly(&h.of)?;
            let scale = element_parse(&h.scale, &self.ring.field)?;
            Value::Poly(hessian_det_scaled(&self.ring, &f, &scale))
        } else if let Some(m) = &block.minors {
            let mat = self.matrix(&m.of)?;
            Value::Ideal(Ideal::new(&self.ring, minors(m.size, mat)?))
        } else if let Some(p) = &block.power {
            Value::Ideal(self.ideal(&p.of)?.power(p.exponent))
        } else if let Some(p) = &block.symbolic_power {
            Value::Ideal(self.ideal(&p.of)?.symbolic_power(p.exponent)?)
        } else {
            unreachable!()
        };
        self.values.push((block.name.clone(), value));
        Ok(())
    }
}

fn build_action(ring: &Ring, block: &GroupBlock) -> Result<GroupAction> {
    let mut names = Vec::new();
    let mut subs = Vec::new();
    for el in &block.element {
        names.push(el.name.clone());
        let sub = match (&el.sub, &el.matrix) {
            (Some(images), None) => {
                let ps = images
                    .iter()
                    .map(|s| poly_parse(s, ring))
                    .collect::<Result<Vec<_>>>()?;
                LinearSubstitution::new(ring, ps)?
            }
            (None, Some(rows)) => {
                let entries = rows
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|s| element_parse(s, &ring.field))
                            .collect::<Result<Vec<FieldElement>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                LinearSubstitution::from_matrix(ring, &entries)?
            }
            _ => {
                return Err(schema_err(format!(
                    "element {:?} must give exactly one of sub or matrix",
                    el.name
                )))
            }
        };
        subs.push(sub);
    }
    let action = GroupAction::new(ring, names, subs)?;
    match (&block.class_sizes, block.order) {
        (Some(sizes), Some(order)) => action.with_class_data(sizes.clone(), order),
        (None, None) => Ok(action),
        _ => Err(schema_err("class_sizes and order must be given together")),
    }
}

fn build_task(block: &TaskBlock) -> Result<Task> {
    match block.kind.as_str() {
        "betti-table" => Ok(Task::BettiTable),
        "betti-characters" => Ok(Task::BettiCharacters {
            homological_degree: block.homological_degree,
        }),
        "module-character" => {
            let degrees = block
                .degrees
                .clone()
                .ok_or_else(|| schema_err("module-character requires degrees"))?;
            Ok(Task::ModuleCharacter { degrees })
        }
        "molien-check" => Ok(Task::MolienCheck { bound: block.bound }),
        "decompose" => {
            match block.against.as_deref() {
                Some("symmetric-group") => {}
                _ => {
                    return Err(schema_err(
                        "decompose requires against = \"symmetric-group\"",
                    ))
                }
            }
            Ok(Task::Decompose {
                homological_degree: block.homological_degree,
            })
        }
        other => Err(schema_err(format!("unknown task kind {other:?}"))),
    }
}

pub fn load_problem(source: &str) -> Result<Problem> {
    let file: ProblemFile =
        toml::from_str(source).map_err(|e| schema_err(format!("problem file: {e}")))?;
    if file.task.is_empty() {
        return Err(schema_err("at least one task is required"));
    }
    let field = build_field(file.field.as_ref())?;
    let var_refs: Vec<String> = file.ring.variables.clone();
    let ring = RingContext::new(field.clone(), var_refs)?;
    let mut defs = Definitions {
        ring: ring.clone(),
        values: Vec::new(),
    };
    for d in &file.define {
        defs.add(d)?;
    }
    let module = match (&file.module.quotient_of, &file.module.subquotient) {
        (Some(name), None) => SubquotientModule::quotient(defs.ideal(name)?),
        (None, Some(sq)) => {
            SubquotientModule::subquotient(defs.ideal(&sq.numerator)?, defs.ideal(&sq.denominator)?)
        }
        _ => {
            return Err(schema_err(
                "module must give exactly one of quotient_of or subquotient",
            ))
        }
    };
    let action = file
        .group
        .as_ref()
        .map(|g| build_action(&ring, g))
        .transpose()?;
    let tasks = file.task.iter().map(build_task).collect::<Result<_>>()?;
    Ok(Problem {
        field,
        ring,
        module,
        action,
        tasks,
    })
}

/// Results of one task, carrying everything the renderers need.
#[derive(Debug)]
pub enum TaskOutput {
    BettiTable {
        rows: Vec<BTreeMap<i64, usize>>,
    },
    BettiCharacters {
        names: Vec<String>,
        table: BettiCharacterTable,
        only_degree: Option<usize>,
    },
    ModuleCharacter {
        names: Vec<String>,
        values: BTreeMap<u32, Vec<FieldElement>>,
    },
    MolienCheck {
        checks: Vec<(String, bool)>,
    },
    Decompose {
        rows: Vec<(usize, i64, Vec<(Vec<usize>, FieldElement)>)>,
    },
}

pub struct RunOptions {
    pub degree_bound: Option<u32>,
    pub check_molien: bool,
    pub reverse_lift: bool,
}

impl Default for RunOptions {
    fn default() -> RunOptions {
        RunOptions {
            degree_bound: None,
            check_molien: false,
            reverse_lift: false,
        }
    }
}

struct Session<'a> {
    problem: &'a Problem,
    opts: &'a RunOptions,
    complex: Option<ChainComplex>,
    table: Option<BettiCharacterTable>,
}

impl<'a> Session<'a> {
    fn complex(&mut self) -> Result<&ChainComplex> {
        if self.complex.is_none() {
            // For a subquotient N/B the resolution tasks act on the ambient
            // quotient R/B; module-character tasks see the subquotient itself.
            let m = &self.problem.module;
            let row = PolyMatrix::from_row(&self.problem.ring, &m.denominator.gens)?;
            self.complex = Some(free_resolution(&row)?);
        }
        Ok(self.complex.as_ref().unwrap())
    }

    fn action(&self) -> Result<&GroupAction> {
        self.problem
            .action
            .as_ref()
            .ok_or_else(|| Error::Usage("this task requires a group block".into()))
    }

    fn character_table(&mut self) -> Result<BettiCharacterTable> {
        if self.table.is_none() {
            let action = self.action()?.clone();
            action.check_ideal_invariance(&self.problem.module.denominator)?;
            let reverse = self.opts.reverse_lift;
            let complex = self.complex()?;
            self.table = Some(betti_characters_opts(complex, &action, reverse)?);
        }
        Ok(self.table.clone().unwrap())
    }

    fn run_task(&mut self, task: &Task) -> Result<TaskOutput> {
        match task {
            Task::BettiTable => Ok(TaskOutput::BettiTable {
                rows: self.complex()?.betti_table(),
            }),
            Task::BettiCharacters { homological_degree } => {
                let names = self.action()?.names.clone();
                match homological_degree {
                    None => Ok(TaskOutput::BettiCharacters {
                        names,
                        table: self.character_table()?,
                        only_degree: None,
                    }),
                    Some(i) => {
                        let action = self.action()?.clone();
                        let complex = self.complex()?;
                        let row = betti_characters_at(complex, &action, *i)?;
                        let field = self.problem.field.clone();
                        let mut rows = vec![BTreeMap::new(); *i + 1];
                        rows[*i] = row;
                        Ok(TaskOutput::BettiCharacters {
                            names,
                            table: BettiCharacterTable {
                                field,
                                names: action.names.clone(),
                                rows,
                            },
                            only_degree: Some(*i),
                        })
                    }
                }
            }
            Task::ModuleCharacter { degrees } => {
                let action = self.action()?;
                let mut values = BTreeMap::new();
                for &j in degrees {
                    values.insert(j, module_character(&self.problem.module, j, action)?);
                }
                Ok(TaskOutput::ModuleCharacter {
                    names: action.names.clone(),
                    values,
                })
            }
            Task::MolienCheck { bound } => {
                let action = self.action()?.clone();
                let quotient = self.problem.module.denominator.clone();
                let bound = bound.or(self.opts.degree_bound);
                let complex = self.complex()?;
                let checks = molien_check(complex, &action, &quotient, bound)?;
                Ok(TaskOutput::MolienCheck { checks })
            }
            Task::Decompose { homological_degree } => {
                let action = self.action()?.clone();
                let n = self.problem.ring.nvars();
                let table = symmetric_group_table(&self.problem.field, n)?;
                // align listed elements with cycle-type classes
                let mut positions = vec![None; table.classes.len()];
                for (e, sub) in action.subs.iter().enumerate() {
                    let ct = cycle_type(sub).ok_or_else(|| {
                        Error::Unsupported(format!(
                            "element {:?} is not a variable permutation; cannot align with \
                             symmetric group classes",
                            action.names[e]
                        ))
                    })?;
                    let idx = table
                        .class_index(&ct)
                        .ok_or_else(|| Error::Internal("cycle type missing from table".into()))?;
                    positions[idx] = Some(e);
                }
                let betti = self.character_table()?;
                let mut rows = Vec::new();
                for (i, row) in betti.rows.iter().enumerate() {
                    if let Some(only) = homological_degree {
                        if i != *only {
                            continue;
                        }
                    }
                    for (j, vals) in row {
                        let mut by_class = Vec::with_capacity(table.classes.len());
                        for p in &positions {
                            let e = p.ok_or_else(|| {
                                Error::Usage(
                                    "decompose requires one representative per cycle type".into(),
                                )
                            })?;
                            by_class.push(vals[e].clone());
                        }
                        rows.push((i, *j, table.decompose(&by_class)?));
                    }
                }
                Ok(TaskOutput::Decompose { rows })
            }
        }
    }
}

pub fn run_problem(problem: &Problem, opts: &RunOptions) -> Result<Vec<TaskOutput>> {
    let mut session = Session {
        problem,
        opts,
        complex: None,
        table: None,
    };
    let mut out = Vec::new();
    for task in &problem.tasks {
        out.push(session.run_task(task)?);
    }
    if opts.check_molien {
        let has_molien = problem
            .tasks
            .iter()
            .any(|t| matches!(t, Task::MolienCheck { .. }));
        if !has_molien {
            out.push(session.run_task(&Task::MolienCheck {
                bound: opts.degree_bound,
            })?);
        }
    }
    Ok(out)
}
