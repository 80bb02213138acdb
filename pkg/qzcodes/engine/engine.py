from qzcodes.common import CodeField

class Engine:
	read_only = False

	def __init__(self, path, mode = 'x', **options):
		"""Initializes a storage engine for a built code.

		:param path: relative or absolute path to the file or directory
		:param mode: in which mode to open the store (r, w, a, x)
		:param **options: options that this engine supports, the Engine specifies
			which options are supported.
		:type path: str
		:type mode: str
		:type **options: dict(str, any)
		"""
		raise NotImplementedError('Implement \'__init__\' for the storage engine')

	def close(self):
		"""Closes the store. It also could perform the final writes to
		synchronize the backing file with the stored fields.

		:returns: None
		"""
		raise NotImplementedError('Implement \'close\' for the storage engine')

	def is_closed(self):
		"""Returns if the store is closed

		:returns: True if the store is closed, otherwise False
		:rtype: boolean
		"""
		raise NotImplementedError('Implement \'is_closed\' for the storage engine')

	def is_read_only(self):
		"""Returns if the store is read-only

		:returns: True if the store is read-only, otherwise False
		:rtype: boolean
		"""
		return self.read_only

	def missing_fields(self):
		"""Returns the mandatory fields that have no value yet

		:rtype: set[CodeField]
		"""
		return CodeField.get_mandatory() - set(self.fields)

	def update_fields(self, fields):
		"""Updates zero or more fields

		:param fields: dictionary of field, value pairs to update
		:type fields: dict(CodeField, any)
		:returns: the fields that changed
		:rtype: dict(CodeField, any)
		"""
		# Early return
		if fields is None:
			return {}

		if self.is_read_only():
			raise TypeError('Cannot modify code store, it is (opened) read-only')

		if not isinstance(fields, dict) or any(not isinstance(field, CodeField) for field in fields):
			raise TypeError('All fields have to be of type \'CodeField\'')

		for field, value in fields.items():
			if not isinstance(value, field.type) or isinstance(value, bool):
				raise TypeError('Field \'{0:s}\' has to be of type \'{1:s}\''.format(field.field_name, field.type.__name__))

		# Only update fields that are changed
		changed_fields = {}
		for field, value in fields.items():
			if field in self.fields and value == self.fields[field]:
				continue
			changed_fields[field] = value

		# Update internally the fields
		self.fields.update(changed_fields)
		return changed_fields
