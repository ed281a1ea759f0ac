import os

import yaml     # pip install pyyaml


def expand_path(file_path):
    """
    Expand '~' and return the absolute path
    Args:
        file_path: Path to a file or folder

    Returns:
        absolute path
    """
    return os.path.abspath(os.path.expanduser(file_path))


def read_yaml_file(file_path, key):
    """
    Read YAML file
    Args:
        file_path: Path to the YAML file
        key: Key to fetch from the YAML file

    Returns:
        value stored under the key
    """
    with open(file_path, 'r') as file:
        data = yaml.safe_load(file)

    # Check if the key exists in the YAML file
    if not isinstance(data, dict) or key not in data:
        raise ValueError(f'ERROR: {key} does not exist in {file_path}')

    return data[key]


def read_binary_file(file_path):
    """
    Read a file as bytes
    :param file_path: Path to the file
    :return: file content as bytes
    """
    if not os.path.isfile(file_path):
        raise FileNotFoundError(f'ERROR: {file_path} does not exist.')
    with open(file_path, 'rb') as file:
        return file.read()


def write_text_file(text, file_path):
    """
    Write UTF-8 text file, creating the parent folder if needed
    :param text: content to write
    :param file_path: Path to the output file
    """
    folder = os.path.dirname(expand_path(file_path))
    os.makedirs(folder, exist_ok=True)
    with open(file_path, 'w', encoding='utf-8', newline='\n') as file:
        file.write(text)
