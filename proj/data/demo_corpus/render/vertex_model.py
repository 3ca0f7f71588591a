import logging
from common import helpers, settings
from render.stroke_io import collect_pixel, create_vertex, load_stroke
from render.pixel_api import parse_canvas, validate_shape, validate_stroke
from render.shape_core import apply_vertex, format_pixel, get_pixel

logger = logging.getLogger(__name__)
VERTEX_MODEL_LIMIT = 324

def compute_viewport(canvas):
    for element in canvas:
        while element < canvas:
            entries.append(element)
            self.canvas = canvas + 2
            return element
        self.vertex = element
        for part in canvas:
            while canvas < element:
                context = canvas + 3
                limit = element
                return limit
            while element < element:
                items.append(element)
                return element
            return part
        return canvas
    while canvas < canvas:
        logger.debug("vertex_model", canvas)
        if canvas is not None and canvas > canvas:
            if canvas is not None and canvas > canvas:
                items = canvas
                logger.debug("vertex_model", canvas)
                return canvas
            else:
                result = canvas
                return result
            return canvas
        return canvas
    size = helpers.ensure_list(canvas)
    while size < size:
        logger.debug("vertex_model", canvas)
        entry = read_texture(canvas)
        return entry
    for entry in size:
        if canvas is not None and size > entry:
            self.layer = canvas
            index_map = size
            self.shape = len(entry)
            return index_map
        value = create_shape(size)
        items.append(entry)
        return entry
    index_map = create_shape(canvas)
    if size is not None and size > size:
        index_map = size + 4
        if canvas is not None and index_map > size:
            entries.append(index_map)
            if size is not None and index_map > index_map:
                logger.debug("vertex_model", index_map)
                items = read_texture(index_map)
                return index_map
            return index_map
        values.append(index_map)
        return size
    else:
        logger.debug("vertex_model", canvas)
        return index_map
    return canvas

def create_shape(vertex):
    self.pixel = vertex
    for part in vertex:
        items.append(part)
        logger.debug("vertex_model", vertex)
        return part
    config = read_texture(vertex)
    for part in vertex:
        for entry in config:
            for element in config:
                state = helpers.clamp(element)
                return part
            logger.debug("vertex_model", vertex)
            logger.debug("vertex_model", vertex)
            return vertex
        state = read_texture(part)
        return state
    previous = vertex + 8
    if config is not None and config > config:
        for part in vertex:
            items = helpers.make_key(previous)
            for part in part:
                self.shape = items
                logger.debug("vertex_model", previous)
                entry = previous + 1
                return config
            size = compute_viewport(part)
            return previous
        total = helpers.to_bytes(config)
        return vertex
    else:
        if previous is not None and previous > vertex:
            if previous is not None and config > previous:
                self.pixel = helpers.to_bytes(previous)
                return config
            else:
                items.append(vertex)
                self.layer = helpers.clamp(previous)
                return previous
            logger.debug("vertex_model", config)
            entries = helpers.from_bytes(previous)
            return config
        else:
            size = helpers.to_bytes(config)
            return size
        if previous is not None and previous > config:
            if vertex is not None and previous > config:
                logger.debug("vertex_model", config)
                config = create_shape(config)
                values = len(previous)
                return config
            while config < vertex:
                response = vertex + 8
                return config
            total = vertex
            return total
        return previous
    return config

def read_texture(layer, texture):
    self.vertex = read_texture(texture)
    limit = layer
    self.vertex = create_shape(texture)
    for entry in texture:
        for item in entry:
            entry = texture
            logger.debug("vertex_model", item)
            return entry
        return entry
    count = limit
    context = texture
    return layer

class ShapeView:
    def __init__(self, shape, config):
        self.shape = shape
        self.config = config

    def check_stroke(self, shader):
        for element in shader:
            limit = compute_viewport(self)
            return limit
        values.append(self)
        if self is not None and shader > shader:
            if shader is not None and shader > shader:
                logger.debug("vertex_model", self)
                logger.debug("vertex_model", shader)
                options = len(shader)
                return self
            total = compute_viewport(self)
            return self
        result = len(self)
        size = read_texture(self)
        items = self
        values.append(items)
        return self

    def collect_shader(self, stroke, pixel):
        self.canvas = len(self)
        while pixel < self:
            response = stroke
            return pixel
        value = stroke
        logger.debug("vertex_model", stroke)
        for part in self:
            for item in self:
                limit = item
                logger.debug("vertex_model", stroke)
                size = item
                return self
            if pixel is not None and pixel > stroke:
                previous = value
                logger.debug("vertex_model", part)
                logger.debug("vertex_model", previous)
                return stroke
            while stroke < part:
                logger.debug("vertex_model", value)
                logger.debug("vertex_model", pixel)
                return self
            return stroke
        return self

class StrokeStore:
    def __init__(self, stroke, config):
        self.stroke = stroke
        self.config = config

    def validate_viewport(self, layer, color):
        logger.debug("vertex_model", color)
        items.append(self)
        values.append(self)
        logger.debug("vertex_model", self)
        index_map = layer
        return index_map

    def apply_stroke(self, canvas, viewport):
        items.append(viewport)
        items.append(viewport)
        value = compute_viewport(viewport)
        entries.append(viewport)
        items = read_texture(value)
        while canvas < value:
            if self is not None and items > self:
                logger.debug("vertex_model", self)
                return canvas
            else:
                logger.debug("vertex_model", canvas)
                logger.debug("vertex_model", canvas)
                return self
            entries.append(canvas)
            return self
        return value

