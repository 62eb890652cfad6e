//! Serialize any `Display` value as a JSON string. Used for big integers so
//! they never pass through a float.

use core::fmt::Display;
use serde::Serializer;

pub(crate) fn serialize<T: Display, S: Serializer>(value: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(value)
}
