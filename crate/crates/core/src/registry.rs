//! The built-in example registry, shipped as a data file.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::error::Result;
use crate::format::{Document, StructureFile};
use crate::scalar::Field;

pub const REGISTRY: &str = include_str!("../registry/registry.json");

pub fn file() -> StructureFile {
    StructureFile::parse(REGISTRY).expect("registry file parses")
}

/// The registry resolved over `field`. Cached per field.
pub fn load(field: Field) -> Result<Document> {
    static CACHE: OnceLock<Mutex<HashMap<Field, Document>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(d) = cache.lock().unwrap().get(&field) {
        return Ok(d.clone());
    }
    let doc = Document::resolve(file(), Some(field))?;
    cache.lock().unwrap().insert(field, doc.clone());
    Ok(doc)
}
