from hypothesis import settings

settings.register_profile('radii', deadline=None, max_examples=200)
settings.load_profile('radii')
