//! Letters files: named commensurators for word evaluation.
//!
//! ```json
//! {
//!   "group": "free2",
//!   "letters": [
//!     {"name": "a", "iso_file": "psi_free.json"},
//!     {"name": "b", "inner": "A"}
//!   ]
//! }
//! ```
//!
//! A letter is an inner automorphism (`inner`, conjugation by the word), an
//! iso definition file (`iso_file`, resolved against the letters file's
//! directory) or an inline iso document (`iso`).

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::iso::{IsoDocument, SubgroupIso};
use crate::words::GroupPresentation;

use super::{CommError, Commensurator};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LetterDefinition {
    Inner(String),
    IsoFile(PathBuf),
    Iso(IsoDocument),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LetterSpec {
    pub name: String,
    #[serde(flatten)]
    pub definition: LetterDefinition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LettersFile {
    pub group: String,
    pub letters: Vec<LetterSpec>,
    #[serde(skip)]
    base_dir: PathBuf,
}

impl LettersFile {
    pub fn from_json(s: &str, base_dir: &Path) -> Result<Self, CommError> {
        let mut f: LettersFile = serde_json::from_str(s).map_err(|e| CommError::Letters(e.to_string()))?;
        f.base_dir = base_dir.to_path_buf();
        Ok(f)
    }

    pub fn load(path: &Path) -> Result<Self, CommError> {
        let text =
            std::fs::read_to_string(path).map_err(|e| CommError::Letters(format!("{}: {e}", path.display())))?;
        Self::from_json(&text, path.parent().unwrap_or(Path::new(".")))
    }

    pub fn group(&self) -> Result<GroupPresentation, CommError> {
        GroupPresentation::by_name(&self.group).ok_or_else(|| CommError::Letters(format!("unknown group `{}`", self.group)))
    }

    /// Builds and validates every letter.
    pub fn build(&self) -> Result<Vec<(String, Commensurator)>, CommError> {
        let group = self.group()?;
        self.letters
            .iter()
            .map(|spec| {
                let c = match &spec.definition {
                    LetterDefinition::Inner(w) => Commensurator::inner(&group, &group.parse(w)?),
                    LetterDefinition::IsoFile(p) => Commensurator::from_iso(SubgroupIso::load(&self.base_dir.join(p))?),
                    LetterDefinition::Iso(doc) => Commensurator::from_iso(doc.build()?),
                };
                if c.group() != &group {
                    return Err(CommError::Letters(format!("letter `{}` is over another group", spec.name)));
                }
                Ok((spec.name.clone(), c))
            })
            .collect()
    }
}
