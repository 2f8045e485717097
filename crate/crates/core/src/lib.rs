pub mod catalog;
pub mod cli;
pub mod count;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod reductions;
pub mod setfamily;
pub mod verify;

pub use count::BigCount;
pub use error::{Error, Result};

/// Serializes with object keys in sorted order, so equal values always give
/// byte-identical text.
pub fn canonical_json<T: serde::Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("value serializes");
    serde_json::to_string(&v).expect("json value serializes")
}
