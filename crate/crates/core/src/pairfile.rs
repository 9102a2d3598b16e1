//! JSON documents describing a family pair.
//!
//! ```json
//! {
//!   "name": "euler",
//!   "tmin": 1,
//!   "F": [ { "entries": [ { "size": [0, 2, 0], "mult": [0, 1] } ] } ],
//!   "G": [ { "entries": [ { "size": [0, 1, 0], "mult": [0, 2] } ] } ]
//! }
//! ```
//!
//! `size(t) = c2·t² + c1·t + c0` and `mult(t) = m1·t + m0`. A strand may
//! instead be `{ "explicit": [[size, mult], …] }`. A template strand may
//! override the document `tmin` with its own.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::families::{FamilyPair, MultisetFamily, Strand, TemplateEntry, DEFAULT_HORIZON};
use crate::multiset::Multiset;

fn default_tmin() -> u64 {
    1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairDocument {
    pub name: String,
    #[serde(default = "default_tmin")]
    pub tmin: u64,
    #[serde(rename = "F")]
    pub f: Vec<StrandDocument>,
    #[serde(rename = "G")]
    pub g: Vec<StrandDocument>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum StrandDocument {
    Template {
        entries: Vec<EntryDocument>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        tmin: Option<u64>,
    },
    Explicit {
        explicit: Vec<[u64; 2]>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryDocument {
    pub size: [i64; 3],
    pub mult: [i64; 2],
}

fn to_strands(side: &str, doc_tmin: u64, strands: &[StrandDocument]) -> Result<Vec<Strand>, Error> {
    strands
        .iter()
        .enumerate()
        .map(|(i, s)| match s {
            StrandDocument::Template { entries, tmin } => Ok(Strand::template(
                tmin.unwrap_or(doc_tmin),
                entries
                    .iter()
                    .map(|e| TemplateEntry::new(e.size, e.mult))
                    .collect(),
            )),
            StrandDocument::Explicit { explicit } => {
                Multiset::from_pairs(explicit.iter().map(|&[s, m]| (s, m)))
                    .map(Strand::Explicit)
                    .map_err(|e| Error::InvalidFamily(format!("{side} strand {i}: {e}")))
            }
        })
        .collect()
}

impl PairDocument {
    /// Validates the document into a pair, checking strands over `horizon`.
    pub fn into_pair(self, horizon: u64) -> Result<FamilyPair, Error> {
        let f = MultisetFamily::new(
            format!("{}-F", self.name),
            to_strands("F", self.tmin, &self.f)?,
            horizon,
        )?;
        let g = MultisetFamily::new(
            format!("{}-G", self.name),
            to_strands("G", self.tmin, &self.g)?,
            horizon,
        )?;
        FamilyPair::new(self.name, f, g)
    }

    pub fn from_pair(pair: &FamilyPair) -> Self {
        // The most common template tmin becomes the document default.
        let mut tmins: Vec<u64> = pair
            .f()
            .strands()
            .iter()
            .filter_map(|s| match s {
                Strand::Template { tmin, .. } => Some(*tmin),
                Strand::Explicit(_) => None,
            })
            .collect();
        tmins.sort();
        let doc_tmin = tmins
            .chunk_by(|a, b| a == b)
            .max_by_key(|run| run.len())
            .map(|run| run[0])
            .unwrap_or(1);
        let render = |fam: &MultisetFamily| -> Vec<StrandDocument> {
            fam.strands()
                .iter()
                .map(|s| match s {
                    Strand::Template { entries, tmin } => StrandDocument::Template {
                        entries: entries
                            .iter()
                            .map(|e| EntryDocument {
                                size: e.size.0,
                                mult: e.mult.0,
                            })
                            .collect(),
                        tmin: (*tmin != doc_tmin).then_some(*tmin),
                    },
                    Strand::Explicit(m) => StrandDocument::Explicit {
                        explicit: m.iter().map(|(s, k)| [s, k]).collect(),
                    },
                })
                .collect()
        };
        Self {
            name: pair.name().to_string(),
            tmin: doc_tmin,
            f: render(pair.f()),
            g: render(pair.g()),
        }
    }
}

/// Parses and validates a pair document.
pub fn parse_family_pair(document: &str) -> Result<FamilyPair, Error> {
    parse_family_pair_with_horizon(document, DEFAULT_HORIZON)
}

pub fn parse_family_pair_with_horizon(document: &str, horizon: u64) -> Result<FamilyPair, Error> {
    let doc: PairDocument = serde_json::from_str(document)?;
    doc.into_pair(horizon)
}

/// Pretty-printed JSON document for `pair`.
pub fn render_family_pair(pair: &FamilyPair) -> String {
    serde_json::to_string_pretty(&PairDocument::from_pair(pair))
        .expect("documents always serialize")
}
