# TopoGalois source package
APP_NAME = "TopoGalois"
__version__ = "1.0.0"
