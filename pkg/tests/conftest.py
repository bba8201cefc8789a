import os
import json

import pytest

from respdeg import clientapi
from respdeg.cgs import validate_model, Coalition, StateOfAffairs
from respdeg.parser import parse_model

FIXTURES = os.path.join(os.path.dirname(__file__), 'fixtures')
E1_PATH = os.path.join(FIXTURES, 'e1.json')

# E1 indices
Q0, Q1, Q2 = 0, 1, 2
A, B = 0, 1
EMPTY = Coalition(0)
AG1 = Coalition.of([0])
AG2 = Coalition.of([1])
GRAND = Coalition.of([0, 1])
BAD = StateOfAffairs.of([Q2])


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Keep the per-user configuration directory and the settings out of the real environment."""
    monkeypatch.setenv('XDG_CONFIG_HOME', str(tmp_path / 'config'))
    monkeypatch.setenv('HOME', str(tmp_path / 'home'))
    monkeypatch.setenv('APPDATA', str(tmp_path / 'appdata'))
    clientapi.initialize()
    yield
    clientapi.initialize()


@pytest.fixture
def e1_path():
    return E1_PATH


@pytest.fixture
def e1_text():
    with open(E1_PATH, 'rb') as fp:
        return fp.read()


@pytest.fixture
def e1_raw(e1_text):
    return json.loads(e1_text)


@pytest.fixture
def e1(e1_text):
    return validate_model(parse_model(e1_text))


def document_from(raw):
    return parse_model(json.dumps(raw))
