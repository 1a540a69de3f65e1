//! The JSON job file schema consumed by the command line front end.
//!
//! ```json
//! {
//!   "f": ["s^3", "s^2*u", "s*u^2", "u^3"],
//!   "g": ["t^2", "v^2", "t*v", "t*v"],
//!   "method": "auto",
//!   "verify_samples": 25
//! }
//! ```
//! `f` entries are expressions over {s,u}, `g` entries over {t,v}. `method`
//! is one of "auto", "general", "ruled", "planar" and defaults to "auto".

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobFile {
    pub f: [String; 4],
    pub g: [String; 4],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verify_samples: Option<u32>,
}
