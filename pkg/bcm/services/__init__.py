"""Logic-independent services: change operators, postulates, diagnostics, poset."""
