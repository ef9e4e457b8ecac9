# -*- coding: utf-8 -*-
# hhl - Hausdorff operators on the Heisenberg group, checked numerically
# Copyright(C) 2026, The hhl developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

'''
    hhl - model/buddy - registration center for buddies


Defining a buddy
================

    from hhl import model

    class NormResult(model.buddy.Buddy, metaclass=model.buddy.Register):

        obj_class = model.results.NormResult
        name = 'my_buddy'

    The buddy will be available as result.my_buddy

    Inside the buddy class, the result object is available as self.obj

'''


class Object(object):
    '''class which can have buddies'''

    def get_buddy(self, name):
        try:
            return self.__dict__['_%s_object_' % name]
        except KeyError:
            try:
                buddy_class = getattr(self, '_%s_class_' % name)
            except AttributeError:
                raise AttributeError(
                    '%s has no buddy called "%s" (is the module defining it '
                    'imported?)' % (self.__class__.__name__, name))
            buddy = buddy_class(self)
            self.__dict__['_%s_object_' % name] = buddy
            return buddy


class Register(type):
    '''metaclass to register the class as a buddy'''

    def __init__(cls, name, bases, dict):
        type.__init__(cls, name, bases, dict)
        assert issubclass(cls.obj_class, Object)
        setattr(
            cls.obj_class,
            '_%s_class_' % cls.name,
            cls
        )
        setattr(
            cls.obj_class,
            cls.name,
            property(lambda self: self.get_buddy(cls.name))
        )


class Buddy(object, metaclass=Register):
    '''base class for buddies'''
    obj_class = Object
    name = 'my_buddy'

    def __init__(self, obj):
        self.obj = obj
