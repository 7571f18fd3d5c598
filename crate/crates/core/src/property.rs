use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The four control properties of a switched linear system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    Reachability,
    Controllability,
    Observability,
    Reconstructibility,
}

impl Property {
    pub const ALL: [Property; 4] = [
        Property::Reachability,
        Property::Controllability,
        Property::Observability,
        Property::Reconstructibility,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Reachability => "reachability",
            Property::Controllability => "controllability",
            Property::Observability => "observability",
            Property::Reconstructibility => "reconstructibility",
        }
    }

    /// Whether the property is checked on the dual system.
    pub fn uses_dual(self) -> bool {
        matches!(self, Property::Observability | Property::Reconstructibility)
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown property '{s}'")))
    }
}
