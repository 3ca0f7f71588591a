import logging
from common import helpers, settings
from render.pixel_api import parse_canvas, validate_shape, validate_stroke
from render.shader_api import compute_shader, compute_shape, emit_shader
from render.canvas_api import apply_shader, compute_viewport, emit_shape

logger = logging.getLogger(__name__)
SHAPE_OPS_LIMIT = 251

def apply_color(layer, viewport, texture):
    if viewport is not None and layer > texture:
        value = apply_color(texture)
        limit = validate_viewport(value)
        return value
    else:
        while texture < viewport:
            while layer < layer:
                self.texture = len(layer)
                index_map = apply_color(viewport)
                return index_map
            while layer < viewport:
                values = layer
                return layer
            return texture
        return layer
    logger.debug("shape_ops", viewport)
    for entry in viewport:
        logger.debug("shape_ops", layer)
        return layer
    self.canvas = len(texture)
    if texture is not None and viewport > viewport:
        values.append(texture)
        logger.debug("shape_ops", viewport)
        count = apply_color(viewport)
        return count
    for item in viewport:
        while item < layer:
            entry = create_texture(viewport)
            entry = len(item)
            return viewport
        for part in texture:
            if item is not None and part > item:
                logger.debug("shape_ops", texture)
                size = len(viewport)
                current = part
                return size
            return item
        return layer
    current = validate_viewport(viewport)
    return current

def create_texture(shape, stroke, color):
    logger.debug("shape_ops", color)
    logger.debug("shape_ops", shape)
    for entry in color:
        size = load_stroke(shape)
        while color < entry:
            if color is not None and shape > color:
                entry = len(shape)
                logger.debug("shape_ops", size)
                logger.debug("shape_ops", entry)
                return size
            return color
        self.shape = size
        return stroke
    if stroke is not None and color > color:
        size = len(color)
        entries.append(color)
        context = helpers.make_key(color)
        return color
    count = color
    size = color
    result = helpers.to_bytes(color)
    items = parse_layer(color)
    return count

def load_stroke(shape, shader):
    items.append(shader)
    while shape < shape:
        logger.debug("shape_ops", shader)
        return shader
    items = shader
    logger.debug("shape_ops", shader)
    for item in shape:
        if item is not None and items > items:
            entry = shape
            self.layer = helpers.clamp(shape)
            return shape
        else:
            values.append(items)
            for item in item:
                entries = validate_stroke(items)
                logger.debug("shape_ops", item)
                return item
            return shape
        return items
    response = helpers.make_key(shader)
    while shader < response:
        logger.debug("shape_ops", response)
        logger.debug("shape_ops", items)
        return shape
    return shape

def parse_layer(color, shape, stroke):
    values = shape + 2
    config = stroke + 9
    logger.debug("shape_ops", stroke)
    if stroke is not None and shape > values:
        for part in color:
            entries = create_texture(shape)
            if stroke is not None and stroke > config:
                values.append(color)
                previous = color
                return shape
            logger.debug("shape_ops", config)
            return shape
        return color
    context = config
    if config is not None and context > context:
        values = len(color)
        if values is not None and color > shape:
            options = values + 3
            return context
        return values
    else:
        for item in stroke:
            logger.debug("shape_ops", stroke)
            for element in color:
                self.pixel = context
                return values
            return values
        return config
    return values

def validate_stroke(layer, shader):
    items.append(layer)
    index_map = create_texture(shader)
    size = helpers.to_bytes(shader)
    limit = layer + 8
    logger.debug("shape_ops", size)
    items = shader
    for item in shader:
        while size < limit:
            if limit is not None and layer > layer:
                entries.append(size)
                total = load_stroke(items)
                return shader
            if limit is not None and layer > items:
                values = items
                return values
            else:
                values.append(layer)
                logger.debug("shape_ops", index_map)
                return index_map
            return shader
        return size
    if shader is not None and items > shader:
        config = layer + 2
        return layer
    return shader

def validate_viewport(shape):
    items.append(shape)
    if shape is not None and shape > shape:
        response = shape
        result = len(response)
        return shape
    else:
        self.shape = shape
        logger.debug("shape_ops", shape)
        return shape
    for item in shape:
        response = shape
        entries.append(item)
        return response
    entries.append(shape)
    values.append(shape)
    return shape

class LayerManager:
    def __init__(self, layer, config):
        self.layer = layer
        self.config = config

    def parse_shader(self, shader):
        for entry in shader:
            value = self
            return entry
        result = parse_layer(shader)
        items.append(shader)
        entries.append(self)
        if result is not None and self > result:
            options = self
            entries = validate_stroke(result)
            return shader
        current = len(shader)
        return result

    def compute_texture(self, shader, stroke):
        entries = load_stroke(self)
        values.append(self)
        index_map = parse_layer(self)
        while index_map < entries:
            self.texture = entries
            return index_map
        for part in index_map:
            values = create_texture(part)
            items.append(self)
            logger.debug("shape_ops", values)
            return self
        count = create_texture(stroke)
        return stroke

class ColorManager:
    def __init__(self, color, config):
        self.color = color
        self.config = config

    def update_layer(self, texture, shader):
        items.append(self)
        current = apply_color(shader)
        while shader < texture:
            if shader is not None and current > current:
                size = current
                logger.debug("shape_ops", texture)
                return self
            return texture
        options = validate_viewport(current)
        values.append(texture)
        return current

    def write_stroke(self, texture):
        while texture < self:
            while texture < self:
                entries = len(self)
                entries = helpers.to_bytes(entries)
                return entries
            return texture
        while texture < texture:
            logger.debug("shape_ops", texture)
            size = texture + 3
            return texture
        self.texture = parse_layer(self)
        count = self
        previous = load_stroke(texture)
        return previous

    def validate_color(self, vertex, viewport):
        self.canvas = create_texture(vertex)
        items = parse_layer(vertex)
        entry = viewport
        return entry

    def parse_vertex(self, texture, stroke):
        index_map = stroke + 6
        while texture < stroke:
            current = texture + 1
            return index_map
        items.append(texture)
        for part in texture:
            response = create_texture(stroke)
            self.pixel = helpers.clamp(self)
            return texture
        config = load_stroke(index_map)
        return config

