class ConfigurationException(Exception):
    def __init__(self, message, key=None):
        super().__init__(message)
        self.key = key
