import os

import pytest

from nichegraph.config import DEFAULT_LIMITS, Limits, load_jobs, load_limits
from nichegraph.utils import read_yaml_file

REPO_CONFIG = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'config.yml')


def write(tmp_path, text):
    path = tmp_path / 'config.yml'
    path.write_text(text)
    return str(path)


def test_repository_config_matches_the_defaults():
    assert load_limits(REPO_CONFIG) == DEFAULT_LIMITS
    assert load_jobs(REPO_CONFIG) == 1


def test_partial_limits_keep_defaults(tmp_path):
    limits = load_limits(write(tmp_path, 'limits:\n  hamiltonian: 18\n'))
    assert limits.hamiltonian == 18
    assert limits.canonical_code == Limits().canonical_code


def test_missing_blocks(tmp_path):
    path = write(tmp_path, 'other: 1\n')
    assert load_limits(path) == DEFAULT_LIMITS
    assert load_jobs(path, default=3) == 3
    assert load_limits(write(tmp_path, 'limits:\n')) == DEFAULT_LIMITS


@pytest.mark.parametrize('text', ['limits:\n  bogus: 3\n', 'limits:\n  holes: -1\n', 'limits:\n  holes: many\n',
                                  'limits: [1, 2]\n'])
def test_invalid_limits(tmp_path, text):
    with pytest.raises(ValueError):
        load_limits(write(tmp_path, text))


def test_invalid_jobs(tmp_path):
    with pytest.raises(ValueError):
        load_jobs(write(tmp_path, 'jobs: 0\n'))


def test_read_yaml_file(tmp_path):
    path = write(tmp_path, 'jobs: 4\n')
    assert read_yaml_file(path, key='jobs') == 4
    with pytest.raises(ValueError):
        read_yaml_file(path, key='limits')
