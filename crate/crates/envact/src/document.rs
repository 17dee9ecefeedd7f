//! JSON action descriptions.
//!
//! A document is either an explicit action
//!
//! ```json
//! { "group": { "cyclic": 2 },
//!   "space": { "sierpinski": true },
//!   "maps": [[0, 1], [null, 1]] }
//! ```
//!
//! or a named example such as `{ "example": { "shift": 4 } }`. `maps[g][x]`
//! is `g.x` or `null` where `g` does not act; rows follow the element order
//! of the group.

use envact_core::group::abelian;
use envact_core::universal::shift_example;
use envact_core::{FiniteGroup, FiniteSpace, PartialAction, PartialBijection};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub space: Option<SpaceSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub maps: Option<Vec<Vec<Option<usize>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub example: Option<ExampleSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupSpec {
    Cyclic(usize),
    /// `Z_a x Z_b x ..`
    Abelian(Vec<usize>),
    Symmetric3(bool),
    Table {
        names: Vec<String>,
        mul: Vec<Vec<usize>>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum SpaceSpec {
    Discrete(usize),
    Indiscrete(usize),
    Sierpinski(bool),
    /// The topology generated by `subbase` on `points` points.
    Subbase {
        points: usize,
        subbase: Vec<Vec<usize>>,
    },
    /// `minimal_opens[x]` is the smallest open set containing `x`.
    MinimalOpens(Vec<Vec<usize>>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum ExampleSpec {
    Shift(usize),
    SierpinskiZ2(bool),
    Trivial { group: GroupSpec, space: SpaceSpec },
}

impl Document {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let doc: Document = serde_json::from_str(text).map_err(CliError::from_json)?;
        doc.check_shape()?;
        Ok(doc)
    }

    pub fn shift(n: usize) -> Self {
        Document {
            group: None,
            space: None,
            maps: None,
            example: Some(ExampleSpec::Shift(n)),
        }
    }

    /// Compact JSON with fields in a fixed order.
    pub fn to_canonical(&self) -> String {
        serde_json::to_string(self).expect("documents always serialize")
    }

    fn check_shape(&self) -> Result<(), CliError> {
        let explicit = [
            self.group.is_some(),
            self.space.is_some(),
            self.maps.is_some(),
        ];
        match (&self.example, explicit) {
            (Some(_), [false, false, false]) | (None, [true, true, true]) => Ok(()),
            (Some(_), _) => Err(CliError::Schema(
                "\"example\" cannot be combined with \"group\", \"space\" or \"maps\"".into(),
            )),
            (None, _) => Err(CliError::Schema(
                "expected \"group\", \"space\" and \"maps\", or \"example\"".into(),
            )),
        }
    }

    pub fn build(&self) -> Result<PartialAction, CliError> {
        if let Some(example) = &self.example {
            return match example {
                ExampleSpec::Shift(n) => Ok(shift_example(*n).map_err(CliError::domain)?.action),
                ExampleSpec::SierpinskiZ2(true) => Ok(PartialAction::sierpinski_z2()),
                ExampleSpec::SierpinskiZ2(false) => {
                    Err(CliError::Schema("\"sierpinski_z2\" must be true".into()))
                }
                ExampleSpec::Trivial { group, space } => {
                    Ok(PartialAction::trivial(group.build()?, space.build()?))
                }
            };
        }
        let (Some(group), Some(space), Some(maps)) = (&self.group, &self.space, &self.maps) else {
            unreachable!("checked by check_shape")
        };
        let group = group.build()?;
        let space = space.build()?;
        if maps.len() != group.order() {
            return Err(CliError::Schema(format!(
                "\"maps\" has {} rows, the group has {} elements",
                maps.len(),
                group.order()
            )));
        }
        let mut bijections = Vec::with_capacity(maps.len());
        for (g, row) in maps.iter().enumerate() {
            if row.len() != space.size() {
                return Err(CliError::Schema(format!(
                    "\"maps\"[{g}] has {} entries, the space has {} points",
                    row.len(),
                    space.size()
                )));
            }
            if let Some(x) = row
                .iter()
                .position(|y| y.is_some_and(|y| y >= space.size()))
            {
                return Err(CliError::Schema(format!(
                    "\"maps\"[{g}][{x}] is out of range"
                )));
            }
            let m = PartialBijection::from_table(row.clone())
                .map_err(|e| CliError::Schema(format!("\"maps\"[{g}]: {e}")))?;
            bijections.push(m);
        }
        PartialAction::new(group, space, bijections).map_err(CliError::domain)
    }
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup, CliError> {
        match self {
            GroupSpec::Cyclic(0) => Err(CliError::Schema("cyclic group of order 0".into())),
            GroupSpec::Cyclic(n) => Ok(FiniteGroup::cyclic(*n)),
            GroupSpec::Abelian(factors) if factors.contains(&0) => {
                Err(CliError::Schema("abelian factor of order 0".into()))
            }
            GroupSpec::Abelian(factors) => Ok(abelian(factors)),
            GroupSpec::Symmetric3(true) => Ok(FiniteGroup::symmetric3()),
            GroupSpec::Symmetric3(false) => {
                Err(CliError::Schema("\"symmetric3\" must be true".into()))
            }
            GroupSpec::Table { names, mul } => {
                FiniteGroup::from_table(names.clone(), mul.clone()).map_err(CliError::domain)
            }
        }
    }
}

impl SpaceSpec {
    pub fn build(&self) -> Result<FiniteSpace, CliError> {
        match self {
            SpaceSpec::Discrete(n) => Ok(FiniteSpace::discrete(*n)),
            SpaceSpec::Indiscrete(n) => Ok(FiniteSpace::indiscrete(*n)),
            SpaceSpec::Sierpinski(true) => Ok(FiniteSpace::sierpinski()),
            SpaceSpec::Sierpinski(false) => {
                Err(CliError::Schema("\"sierpinski\" must be true".into()))
            }
            SpaceSpec::Subbase { points, subbase } => {
                FiniteSpace::from_subbase(*points, subbase).map_err(CliError::domain)
            }
            SpaceSpec::MinimalOpens(opens) => {
                let n = opens.len();
                if let Some(x) = opens.iter().position(|u| u.iter().any(|&y| y >= n)) {
                    return Err(CliError::Schema(format!(
                        "\"minimal_opens\"[{x}] is out of range"
                    )));
                }
                let sets = opens
                    .iter()
                    .map(|u| envact_core::sets::from_indices(n, u.iter().copied()))
                    .collect();
                FiniteSpace::from_minimal_opens(sets).map_err(CliError::domain)
            }
        }
    }

    /// The canonical description of a space: its minimal neighbourhoods.
    pub fn describe(space: &FiniteSpace) -> SpaceSpec {
        SpaceSpec::MinimalOpens(
            space
                .minimal_opens()
                .iter()
                .map(envact_core::sets::elements)
                .collect(),
        )
    }
}

impl GroupSpec {
    pub fn describe(group: &FiniteGroup) -> GroupSpec {
        GroupSpec::Table {
            names: group.names().to_vec(),
            mul: group.table(),
        }
    }
}

impl From<&PartialAction> for Document {
    fn from(pa: &PartialAction) -> Self {
        Document {
            group: Some(GroupSpec::describe(pa.group())),
            space: Some(SpaceSpec::describe(pa.space())),
            maps: Some(pa.maps().iter().map(|m| m.table().to_vec()).collect()),
            example: None,
        }
    }
}
