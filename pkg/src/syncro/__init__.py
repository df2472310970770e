"""Synchronizing automata: state complexity of Syn(A) and maximality criteria."""
