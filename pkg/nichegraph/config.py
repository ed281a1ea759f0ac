"""
Hard size bounds of the exact routines and the defaults read from config.yml.

An example of the YAML file:

    limits:
      canonical_code: 10
      hamiltonian: 22
    jobs: 4

Keys missing from the file keep their default value.
"""

import dataclasses
from dataclasses import dataclass

from nichegraph.utils import read_yaml_file


@dataclass(frozen=True)
class Limits:
    canonical_code: int = 10
    clique_number: int = 32
    matching: int = 24
    hamiltonian: int = 22
    holes: int = 16
    asteroidal: int = 16
    regular_subsets: int = 12
    planarity: int = 12
    orientations: int = 24
    census: int = 20
    cross_check: int = 7


DEFAULT_LIMITS = Limits()


def load_limits(file_path):
    """
    Read the 'limits' block of a YAML config file
    :param file_path: Path to the YAML file
    :return: Limits
    """
    try:
        data = read_yaml_file(file_path, key='limits') or {}
    except ValueError:
        return DEFAULT_LIMITS
    if not isinstance(data, dict):
        raise ValueError(f'ERROR: limits in {file_path} must be a mapping')
    known = {field.name for field in dataclasses.fields(Limits)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise ValueError(f'ERROR: unknown limits in {file_path}: {", ".join(unknown)}')
    for name, value in data.items():
        if not isinstance(value, int) or value < 0:
            raise ValueError(f'ERROR: limit {name} must be a nonnegative integer, got {value!r}')
    return dataclasses.replace(DEFAULT_LIMITS, **data)


def load_jobs(file_path, default=1):
    """
    Read the optional 'jobs' value of a YAML config file
    :param file_path: Path to the YAML file
    :param default: value used when the key is absent
    :return: number of worker processes
    """
    try:
        jobs = read_yaml_file(file_path, key='jobs')
    except ValueError:
        return default
    if not isinstance(jobs, int) or jobs < 1:
        raise ValueError(f'ERROR: jobs must be a positive integer, got {jobs!r}')
    return jobs
