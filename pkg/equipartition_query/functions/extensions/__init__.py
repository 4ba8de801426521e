from .loader import DEFAULT_SCHEME, get_extension_scheme, load_extension_schemes
from .schema import ExtensionScheme

__all__ = ["DEFAULT_SCHEME", "ExtensionScheme", "get_extension_scheme", "load_extension_schemes"]
