# -*- coding: utf-8 -*-

"""
Addressable cache used for configuration and profiling records.
"""

import pathlib
import pickle as pk
import re
from typing import Any, Dict, List, Optional, Union


def update_dict_recursively(first: dict, second: dict,
                            create_keys: bool = False) -> dict:
    """
    Update the first dictionary with values from the second
    dictionary, descending into nested dictionaries. Values
    of a different type than the existing ones are skipped.
    Warning: The original dictionary (first) will be updated
    in place!

    :param first: Dictionary to update.
    :param second: Update with values from this dictionary
    :param create_keys: Create non-existent keys in first?

    :return: Returns updated first dictionary.
    """

    for key, value in second.items():
        if (not create_keys and key not in first) or \
                (key in first and first[key] is not None and
                 not isinstance(value, type(first[key]))):
            continue
        if isinstance(value, dict):
            first[key] = update_dict_recursively(
                first.get(key) or CacheDict(), value,
                create_keys=create_keys
            )
        else:
            first[key] = value

    return first


class CacheDict(dict):
    """ Special type of dictionary used in cache structure. """
    pass


class Cache(object):
    """
    Dictionary tree addressed by dotted paths, such as "suite.n".
    Dots inside of a single key may be escaped as "\\.".
    """

    CACHE_PATH_SEP = "."
    """
    Separator for cache paths.
    """

    def __init__(self, initial: Optional[dict] = None):
        self.cache = CacheDict()

        if initial is not None:
            self.cache = update_dict_recursively(self.cache, initial, create_keys=True)

    def __getitem__(self, option: str) -> Any:
        """
        Access option by path.

        :param option: Path to the option.

        :return: Returns value of the option or None if
        requested option does not exist.
        """

        return self.get_path(option, create=False, none_when_missing=True)

    def __setitem__(self, option: str, value: Any):
        """
        Change option by path, creating it when missing.

        :param option: Path to the option.
        :param value: New value for the option, must
        be of the same type as the old one.
        """

        self.set_path(option, value, create=True)

    def cache_path(self, path: str) -> List[str]:
        """
        Transform given path into a list of keys in the
        cache dictionary.

        :param path: String representation of the path.

        :return: Returns list of keys to get to the option.
        """

        return [ name.replace("\\", "") for name in re.split(r"(?<!\\)\.", path) ]

    def get_path_dict(self, path: str,
                      create: bool = False,
                      none_when_missing: bool = False) -> Optional[CacheDict]:
        """
        Get dictionary which contains given path.

        :param path: Path to the value.
        :param create: When set to true, the path will be
            created, else exception will be thrown when any
            dictionary in the path is missing.
        :param none_when_missing: Return None if there is no
            parameter with such name.

        :return: Returns the dictionary which should contain
        given path.
        """

        path_parts = self.cache_path(path)
        cache = self.cache

        # Iterate path only, skip the option itself.
        for key in path_parts[:-1]:
            if cache.get(key) is None:
                if create:
                    cache[key] = CacheDict()
                elif none_when_missing:
                    return None
                else:
                    raise KeyError(f"Given key \"{key}\" in path \"{path}\" does not exist!")
            if not isinstance(cache.get(key), CacheDict):
                raise KeyError(f"Given key \"{key}\" in path \"{path}\" does not lead to a dictionary!")

            cache = cache[key]

        return cache

    def get_path(self, path: str, create: bool = False,
                 none_when_missing: bool = False,
                 default: Any = None) -> Any:
        """
        Access value by path.

        :param path: Path to the value.
        :param create: Create any missing keys in the path.
            When set to False, this method will throw for
            missing keys!
        :param none_when_missing: Return None if there is no
            parameter with such name.
        :param default: Value returned by default.

        :return: Returns value of the option.
        """

        if not path:
            return self.cache

        name = self.cache_path(path)[-1]
        cache = self.get_path_dict(path, create, none_when_missing)

        if cache is None or (name not in cache and not create):
            if none_when_missing:
                return None
            elif default is not None:
                return default
            raise KeyError(f"Given cache path \"{path}\" does not exist!")

        return cache.get(name)

    def set_path(self, path: str, value: Any, create: bool = False):
        """
        Change value by path.

        :param path: Path to the value.
        :param value: New value for the option, must
            be of the same type as the old one.
        :param create: Create any missing keys in the path.
            When set to False, this method will throw for missing
            keys!
        """

        name = self.cache_path(path)[-1]
        cache = self.get_path_dict(path, create)

        if cache.get(name) is None:
            if not create and name not in cache:
                raise KeyError(f"Given option \"{path}\" does not exist!")
        elif value is not None and not isinstance(value, type(cache[name])):
            raise ValueError(f"Value for given option \"{path}\" must be {type(cache[name])}!")

        cache[name] = value

    def has_value(self, path: str) -> bool:
        """
        Does given path contain an end-point value?

        :param path: Path to the value.

        :return: Returns whether given path contains a value.
        """

        name = self.cache_path(path)[-1]
        path_dict = self.get_path_dict(
            path=path, create=False,
            none_when_missing=True
        )

        return path_dict is not None and \
            name in path_dict and \
            not isinstance(path_dict[name], CacheDict)

    def flatten(self, skip_objects: bool = True) -> Dict[str, Any]:
        """
        Flatten the tree into a single level dictionary
        keyed by full paths.

        :param skip_objects: Skip values which are not plain
            data, such as registered system instances.

        :return: Returns the flattened dictionary.
        """

        plain = (bool, int, float, str, list, tuple, type(None))
        result = { }

        def recurse(current: Union[CacheDict, Any], prefix: str):
            for key, value in current.items():
                full = f"{prefix}{self.CACHE_PATH_SEP}{key}" if prefix else key
                if isinstance(value, CacheDict):
                    recurse(value, full)
                elif not skip_objects or isinstance(value, plain):
                    result[full] = value

        recurse(self.cache, "")
        return result

    def save_cache_pickle_to_file(self, path: Union[str, pathlib.Path]):
        """
        Save the whole cache tree into a single pickle file.

        :param path: Target file path.
        """

        path = pathlib.Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "wb") as f:
            pk.dump(dict(self.cache), f)
