"""Model-oriented belief change on finite bases."""
