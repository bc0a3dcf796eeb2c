//! JSON iso definition files.
//!
//! ```json
//! {
//!   "group": "free2",
//!   "domain":   {"kernel": {"moduli": [2, 3], "images": {"A": [1, 0], "B": [0, 1]}}},
//!   "codomain": {"kernel": {"moduli": [2, 3], "images": {"A": [0, 1], "B": [1, 0]}}},
//!   "images": ["A^3", "..."],
//!   "inverse_images": ["..."]
//! }
//! ```
//!
//! A side may instead be `{"table": <coset table document>}`. Generators left
//! out of a kernel's `images` map to zero. `inverse_images` is optional for
//! free groups.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{IsoError, SubgroupIso};
use crate::subgroups::{CosetTable, CosetTableDocument, FiniteAbelianTarget};
use crate::words::GroupPresentation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubgroupSpec {
    Kernel { moduli: Vec<u32>, images: BTreeMap<String, Vec<i64>> },
    Table(CosetTableDocument),
}

impl SubgroupSpec {
    pub fn build(&self, group: &GroupPresentation) -> Result<CosetTable, IsoError> {
        match self {
            SubgroupSpec::Kernel { moduli, images } => {
                if let Some(name) = images.keys().find(|k| group.generator_index(k).is_none()) {
                    return Err(IsoError::File(format!("unknown generator `{name}` in kernel images")));
                }
                let per_gen = group
                    .generators()
                    .iter()
                    .map(|g| images.get(g).cloned().unwrap_or_else(|| vec![0; moduli.len()]))
                    .collect();
                let target = FiniteAbelianTarget::new(moduli.clone(), per_gen)?;
                Ok(CosetTable::kernel(group, &target)?)
            }
            SubgroupSpec::Table(doc) => {
                if doc.group != group.name() {
                    return Err(IsoError::File(format!("table for `{}` in a `{}` file", doc.group, group.name())));
                }
                Ok(CosetTable::from_document(doc)?)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoDocument {
    pub group: String,
    pub domain: SubgroupSpec,
    pub codomain: SubgroupSpec,
    pub images: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inverse_images: Option<Vec<String>>,
}

impl IsoDocument {
    pub fn from_json(s: &str) -> Result<Self, IsoError> {
        serde_json::from_str(s).map_err(|e| IsoError::File(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, IsoError> {
        let text = std::fs::read_to_string(path).map_err(|e| IsoError::File(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn group(&self) -> Result<GroupPresentation, IsoError> {
        GroupPresentation::by_name(&self.group).ok_or_else(|| IsoError::File(format!("unknown group `{}`", self.group)))
    }

    /// Parses and validates the isomorphism.
    pub fn build(&self) -> Result<SubgroupIso, IsoError> {
        let group = self.group()?;
        let domain = self.domain.build(&group)?;
        let codomain = self.codomain.build(&group)?;
        let parse_all = |ws: &[String]| ws.iter().map(|w| group.parse(w)).collect::<Result<Vec<_>, _>>();
        let images = parse_all(&self.images)?;
        let inverse_images = self.inverse_images.as_deref().map(parse_all).transpose()?;
        SubgroupIso::new(&domain, &codomain, images, inverse_images)
    }
}

impl SubgroupIso {
    /// Loads and validates an iso definition file.
    pub fn load(path: &Path) -> Result<SubgroupIso, IsoError> {
        IsoDocument::load(path)?.build()
    }

    pub fn from_json(s: &str) -> Result<SubgroupIso, IsoError> {
        IsoDocument::from_json(s)?.build()
    }

    /// Document form, with both image lists and kernels written as tables.
    pub fn to_document(&self) -> IsoDocument {
        let g = self.group();
        IsoDocument {
            group: g.name().to_string(),
            domain: SubgroupSpec::Table(self.domain().to_document()),
            codomain: SubgroupSpec::Table(self.codomain().to_document()),
            images: self.images().iter().map(|w| g.format(w)).collect(),
            inverse_images: Some(self.inverse_images().iter().map(|w| g.format(w)).collect()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_form_round_trips() {
        let f2 = GroupPresentation::free_rank2();
        let t = CosetTable::kernel(&f2, &FiniteAbelianTarget::new(vec![3], vec![vec![1], vec![0]]).unwrap()).unwrap();
        let id = SubgroupIso::identity(&t);
        let json = serde_json::to_string(&id.to_document()).unwrap();
        assert_eq!(SubgroupIso::from_json(&json).unwrap(), id);
    }

    #[test]
    fn kernel_spec_rejects_unknown_names() {
        let doc = r#"{"group": "free2",
            "domain": {"kernel": {"moduli": [2], "images": {"Z": [1]}}},
            "codomain": {"kernel": {"moduli": [2], "images": {"A": [1]}}},
            "images": []}"#;
        assert!(matches!(SubgroupIso::from_json(doc), Err(IsoError::File(_))));
        assert!(matches!(SubgroupIso::from_json("{"), Err(IsoError::File(_))));
    }
}
