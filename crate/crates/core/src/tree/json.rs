//! JSON encoding: `"leaf"` or `{"l": <tree>, "a": "<label>", "r": <tree>}`.

use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use super::{Label, Tree};

const LEAF: &str = "leaf";

impl Serialize for Tree {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.decompose() {
            Err(_) => serializer.serialize_str(LEAF),
            Ok((l, a, r)) => {
                let mut map = serializer.serialize_map(Some(3))?;
                map.serialize_entry("l", l)?;
                map.serialize_entry("a", a.as_str())?;
                map.serialize_entry("r", r)?;
                map.end()
            }
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Repr {
    Leaf(String),
    Node {
        l: Box<Repr>,
        a: String,
        r: Box<Repr>,
    },
}

impl Repr {
    fn into_tree<E: de::Error>(self) -> Result<Tree, E> {
        match self {
            Repr::Leaf(s) if s == LEAF => Ok(Tree::Leaf),
            Repr::Leaf(s) => Err(E::custom(format!("expected \"leaf\", found {s:?}"))),
            Repr::Node { l, a, r } => {
                let label = Label::new(&a).map_err(E::custom)?;
                Ok(Tree::graft(l.into_tree()?, label, r.into_tree()?))
            }
        }
    }
}

impl<'de> Deserialize<'de> for Tree {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Repr::deserialize(deserializer)?.into_tree()
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let name = String::deserialize(deserializer)?;
        Label::new(&name).map_err(de::Error::custom)
    }
}
