// placeholder translation unit; populated as the module lands
