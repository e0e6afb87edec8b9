"""Low-degree group homology and coinvariants over Z."""
