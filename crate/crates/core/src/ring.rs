//! Ambient polynomial ring: coefficient field, ordered variables, default
//! monomial order. All variables have degree 1.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::monomial::MonomialOrder;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingContext {
    pub field: Field,
    pub variables: Vec<String>,
    pub order: MonomialOrder,
}

pub type Ring = Arc<RingContext>;

impl RingContext {
    pub fn new(field: Field, variables: Vec<String>) -> Result<Ring> {
        if variables.is_empty() {
            return Err(Error::Usage("a ring needs at least one variable".into()));
        }
        for (i, v) in variables.iter().enumerate() {
            if variables[..i].contains(v) {
                return Err(Error::Usage(format!("duplicate variable '{v}'")));
            }
            if Some(v.as_str()) == field.generator_name() {
                return Err(Error::Usage(format!(
                    "variable '{v}' clashes with the field generator"
                )));
            }
        }
        Ok(Arc::new(RingContext {
            field,
            variables,
            order: MonomialOrder::Grevlex,
        }))
    }

    pub fn rational(variables: &[&str]) -> Ring {
        RingContext::new(
            FieldSpec::rational(),
            variables.iter().map(|s| s.to_string()).collect(),
        )
        .expect("valid ring")
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    /// Internal ring with a fresh elimination variable prepended, ordered to
    /// eliminate it.
    pub fn with_elim_var(&self) -> Ring {
        let mut vars = vec!["@t".to_string()];
        vars.extend(self.variables.iter().cloned());
        Arc::new(RingContext {
            field: self.field.clone(),
            variables: vars,
            order: MonomialOrder::ElimFirst(1),
        })
    }
}
