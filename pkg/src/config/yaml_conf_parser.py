import yaml

from config.config_parser import ConfigParser
from exception.configuration import ConfigurationException


class YamlConfParser(ConfigParser):
    def __init__(self, yaml_text) -> None:
        super().__init__(yaml_text)

    def parse(self):
        try:
            loaded = yaml.safe_load(self.conf_text or "")
        except yaml.YAMLError as e:
            raise ConfigurationException("Malformed YAML configuration: {}".format(e))

        # an empty document means all defaults
        if loaded is None:
            loaded = dict()
        if not isinstance(loaded, dict):
            raise ConfigurationException(
                "Configuration root must be a mapping, got {}".format(
                    type(loaded).__name__
                )
            )
        self.set_conf_obj(loaded)

        return self.get_conf_obj()

    def validate(self):
        return True

    def process(self):
        pass
