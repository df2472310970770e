import re

from syncro.core import from_letter_images
from syncro.dot import automaton_dot, power_dot
from syncro.families import cerny

from conftest import GOLDEN


def test_fig3_power_golden(fig3):
    assert power_dot(fig3, "fig3") == (GOLDEN / "fig3_power.dot").read_text()


def test_fig3_power_counts(fig3):
    text = power_dot(fig3, "fig3")
    nodes = re.findall(r'^  ("\{[\d,]+\}")( \[shape=doublecircle\])?;$', text, re.M)
    assert len(nodes) == 15
    assert sum(1 for _, dc in nodes if dc) == 4
    assert len(re.findall(r"-> .*\[label=", text)) == 30


def test_automaton_edges():
    text = automaton_dot(cerny(4), "c4")
    assert len(re.findall(r"\[label=", text)) == 8
    assert len(re.findall(r'^  "\d+";$', text, re.M)) == 4


def test_one_state_self_loops():
    text = automaton_dot(from_letter_images([[0], [0], [0]]))
    assert text.count('"0" -> "0"') == 3
